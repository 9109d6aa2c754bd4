"""Circulant preconditioner M^{-1} = F^H diag(k)^{-1} F with k the diagonal of K = F A F^H.

Only the coil term K_c of K is not diagonal; K_d is diagonal because D_x^H D_x + D_y^H D_y is
BCCB, and K_w = I because the wavelet is orthogonal.
"""

import logging
import math

import numpy as np

from ..encoding import EncodingContext
from ..exceptions import DimensionMismatch, InvalidParameter, SingularPreconditioner
from ..models import PreconditionerType, SamplingMask
from ..transforms import fft2, ifft2, laplacian_first_row
from ..types import CoilSet, ComplexImage
from .bases import BasePreconditioner


def _mask_cells(mask) -> np.ndarray:
    if isinstance(mask, SamplingMask):
        return mask.cells
    return np.asarray(mask, dtype=np.float64)


def k_c_diag(sens: CoilSet, mask) -> ComplexImage:
    """Diagonal of K_c = sum_i F S_i^H F^H R F S_i F^H.

    C_i = F S_i F^H is BCCB with first row c_{1;i} = ifft2(conj(s_i)), and with unitary transforms
    |C_i[q, p]|^2 = |c_{1;i}[q - p]|^2 / N. Hence k_c[p] = sum_q r[q] w[q - p] / N with
    w = sum_i |c_{1;i}|^2, a circular cross-correlation evaluated as
    ifft2(conj(fft2(w)) * fft2(r)) / sqrt(N). The imaginary part is round-off and is dropped.
    """
    sens = np.asarray(sens)
    if sens.ndim == 2:
        sens = sens[np.newaxis]
    r = _mask_cells(mask)
    if sens.shape[-2:] != r.shape:
        raise DimensionMismatch(f"sensitivities {sens.shape[-2:]} do not match mask {r.shape}")
    first_rows = ifft2(np.conj(sens))
    w = np.sum(np.abs(first_rows) ** 2, axis=0)
    kc = ifft2(np.conj(fft2(w)) * fft2(r)) / math.sqrt(r.size)
    return kc.real.astype(np.complex128)


def k_d_diag(m: int, n: int) -> ComplexImage:
    """Eigenvalues of the periodic TV normal operator: 4 - 2 cos(2 pi p / m) - 2 cos(2 pi q / n)."""
    if m < 2 or n < 2:
        raise InvalidParameter(f"periodic differences need m, n >= 2, got {m}x{n}")
    rows = 2 - 2 * np.cos(2 * np.pi * np.arange(m) / m)
    cols = 2 - 2 * np.cos(2 * np.pi * np.arange(n) / n)
    return np.add.outer(rows, cols).astype(np.complex128)


def k_d_diag_from_first_row(m: int, n: int) -> ComplexImage:
    """Same eigenvalues through the FFT of t_1; the unitary transform needs the sqrt(N) factor back."""
    return math.sqrt(m * n) * fft2(laplacian_first_row(m, n))


def circulant_diagonal(ctx: EncodingContext) -> ComplexImage:
    """k = mu k_c + lambda k_d + gamma k_w, with k_w = 1."""
    params = ctx.params
    k = np.full(ctx.shape, params.gamma, dtype=np.complex128)
    if params.mu:
        k += params.mu * k_c_diag(ctx.sens, ctx.mask)
    if params.lam:
        k += params.lam * k_d_diag(*ctx.shape)
    return k


class CirculantPreconditioner(BasePreconditioner):
    _setting_names = ("SINGULAR_TOLERANCE",)
    _singular_tolerance = None
    k: np.ndarray = None
    k_inv: np.ndarray = None

    def get_preconditioner_type(self):
        return PreconditionerType.CIRCULANT

    def build(self):
        k = circulant_diagonal(self._ctx)
        smallest = float(np.abs(k).min())
        if not np.all(np.isfinite(k)) or smallest <= self._singular_tolerance:
            logging.critical("Circulant diagonal is singular", extra={"min_abs": smallest})
            raise SingularPreconditioner(
                f"min |k| = {smallest!r}; use gamma > 0 or a mask that samples every frequency row"
            )
        self.k = k
        self.k_inv = 1.0 / k
        self.k.setflags(write=False)
        self.k_inv.setflags(write=False)

    def apply(self, r):
        self._check(r)
        return ifft2(self.k_inv * fft2(r))


def build_circulant(ctx: EncodingContext, singular_tolerance: float = 1e-14) -> CirculantPreconditioner:
    return CirculantPreconditioner(ctx, SINGULAR_TOLERANCE=singular_tolerance).ready()


def apply_circulant(r: ComplexImage, preconditioner: CirculantPreconditioner) -> ComplexImage:
    return preconditioner.apply(r)
