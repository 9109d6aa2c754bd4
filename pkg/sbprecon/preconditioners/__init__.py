from .bases import BasePreconditioner  # noqa
from .circulant import (  # noqa
    CirculantPreconditioner,
    apply_circulant,
    build_circulant,
    circulant_diagonal,
    k_c_diag,
    k_d_diag,
    k_d_diag_from_first_row,
)
from .identity import IdentityPreconditioner  # noqa
from .jacobi import JacobiPreconditioner, apply_jacobi, build_jacobi, jacobi_diagonal  # noqa
