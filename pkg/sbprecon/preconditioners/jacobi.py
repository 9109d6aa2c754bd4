import logging

import numpy as np

from ..encoding import EncodingContext
from ..exceptions import SingularDiagonal
from ..models import PreconditionerType
from .bases import BasePreconditioner


def jacobi_diagonal(ctx: EncodingContext) -> np.ndarray:
    """diag(A) in closed form.

    F^H R F is circulant with constant diagonal f = sampled cells / N, so pixel j of the fidelity
    term is mu f sum_i |s_ij|^2; each periodic difference contributes 2 to the diagonal.
    """
    params = ctx.params
    coil_energy = np.sum(np.abs(ctx.sens) ** 2, axis=0)
    diagonal = params.mu * ctx.mask.sampled_fraction * coil_energy + 4 * params.lam + params.gamma
    return diagonal.astype(np.complex128)


class JacobiPreconditioner(BasePreconditioner):
    _setting_names = ("SINGULAR_TOLERANCE",)
    _singular_tolerance = None
    d_inv: np.ndarray = None

    def get_preconditioner_type(self):
        return PreconditionerType.JACOBI

    def build(self):
        diagonal = jacobi_diagonal(self._ctx)
        magnitude = np.abs(diagonal)
        if not np.all(np.isfinite(magnitude)) or magnitude.min() <= self._singular_tolerance:
            logging.critical("Jacobi diagonal is singular", extra={"min_abs": float(np.nanmin(magnitude))})
            raise SingularDiagonal(f"min |diag(A)| = {np.nanmin(magnitude)!r}")
        self.d_inv = 1.0 / diagonal
        self.d_inv.setflags(write=False)

    def apply(self, r):
        self._check(r)
        return self.d_inv * r


def build_jacobi(ctx: EncodingContext, singular_tolerance: float = 1e-14) -> JacobiPreconditioner:
    return JacobiPreconditioner(ctx, SINGULAR_TOLERANCE=singular_tolerance).ready()


def apply_jacobi(r: np.ndarray, preconditioner: JacobiPreconditioner) -> np.ndarray:
    return preconditioner.apply(r)
