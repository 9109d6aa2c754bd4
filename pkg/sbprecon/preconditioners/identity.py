import numpy as np

from ..models import PreconditionerType
from .bases import BasePreconditioner


class IdentityPreconditioner(BasePreconditioner):
    """M = I; plain conjugate gradients."""

    def get_preconditioner_type(self):
        return PreconditionerType.NONE

    def build(self):
        pass

    def apply(self, r):
        self._check(r)
        return np.array(r, dtype=np.complex128, copy=True)

    def as_operator(self):
        return None
