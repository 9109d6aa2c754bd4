"""SENSE encoding R F S_i, the Split Bregman system matrix A and the right-hand side b."""

import dataclasses
import typing

import numpy as np

from .exceptions import CoilIndexOutOfRange, DimensionMismatch
from .models import ReconParams, SamplingMask
from .models.images import as_coilset, check_same_shape
from .transforms import WaveletSpec, dx_adj, dy_adj, fft2, idwt2, ifft2, tv_normal
from .types import CoilSet, ComplexImage


AUXILIARY_NAMES = ("d_x", "d_y", "d_w", "b_x", "b_y", "b_w")


@dataclasses.dataclass(frozen=True)
class EncodingContext:
    """Normalized sensitivities, sampling mask and weights entering A; immutable once built."""

    sens: CoilSet
    mask: SamplingMask
    params: ReconParams
    wavelet: typing.Optional[WaveletSpec] = None

    def __post_init__(self):
        sens = np.asarray(self.sens)
        if sens.ndim == 2:
            sens = sens[np.newaxis]
        object.__setattr__(self, "sens", as_coilset(sens))
        if self.sens.shape[-2:] != self.mask.shape:
            raise DimensionMismatch(
                f"sensitivities {self.sens.shape[-2:]} do not match mask {self.mask.shape}"
            )
        if self.wavelet is None:
            object.__setattr__(self, "wavelet", WaveletSpec(levels=self.params.wavelet_levels))
        self.wavelet.check(*self.shape)

    @property
    def shape(self) -> tuple:
        return self.mask.shape

    @property
    def ncoils(self) -> int:
        return self.sens.shape[0]

    @property
    def r(self) -> np.ndarray:
        return self.mask.cells

    def with_params(self, params: ReconParams) -> "EncodingContext":
        return dataclasses.replace(self, params=params, wavelet=None)


def _coil(ctx: EncodingContext, i: int) -> np.ndarray:
    if not 1 <= i <= ctx.ncoils:
        raise CoilIndexOutOfRange(f"coil {i} outside [1, {ctx.ncoils}]")
    return ctx.sens[i - 1]


def _check_image(x: np.ndarray, ctx: EncodingContext):
    if np.shape(x) != ctx.shape:
        raise DimensionMismatch(f"image shape {np.shape(x)} does not match context {ctx.shape}")


def forward_coil(x: ComplexImage, ctx: EncodingContext, i: int) -> ComplexImage:
    """R F S_i x for the 1-based coil index i."""
    s = _coil(ctx, i)
    _check_image(x, ctx)
    return ctx.r * fft2(s * x)


def adjoint_coil(y: ComplexImage, ctx: EncodingContext, i: int) -> ComplexImage:
    """S_i^H F^H R^H y for the 1-based coil index i."""
    s = _coil(ctx, i)
    _check_image(y, ctx)
    return np.conj(s) * ifft2(ctx.r * y)


def forward(x: ComplexImage, ctx: EncodingContext) -> CoilSet:
    """All coils at once: (Nc, m, n) k-space planes."""
    _check_image(x, ctx)
    return ctx.r * fft2(ctx.sens * x)


def adjoint_sum(y: CoilSet, ctx: EncodingContext) -> ComplexImage:
    """sum_i S_i^H F^H R^H y_i, reduced over coils in fixed order."""
    if np.shape(y) != ctx.sens.shape:
        raise DimensionMismatch(
            f"coil data shape {np.shape(y)} does not match sensitivities {ctx.sens.shape}"
        )
    return np.sum(np.conj(ctx.sens) * ifft2(ctx.r * y), axis=0)


def apply_A(x: ComplexImage, ctx: EncodingContext) -> ComplexImage:
    """mu sum_i (R F S_i)^H R F S_i x + lambda (D_x^H D_x + D_y^H D_y) x + gamma x.

    W^H W = I for the orthogonal wavelet, so the wavelet term is gamma x exactly.
    """
    params = ctx.params
    out = params.gamma * np.asarray(x, dtype=np.complex128)
    if params.mu:
        out = out + params.mu * adjoint_sum(forward(x, ctx), ctx)
    else:
        _check_image(x, ctx)
    if params.lam:
        out = out + params.lam * tv_normal(x)
    return out


def _aux(aux, name: str) -> np.ndarray:
    if isinstance(aux, typing.Mapping):
        return aux[name]
    return getattr(aux, name)


def build_rhs(y: CoilSet, aux, ctx: EncodingContext) -> ComplexImage:
    """
    b = mu sum_i (R F S_i)^H y_i + lambda [D_x^H (d_x - b_x) + D_y^H (d_y - b_y)] + gamma W^H (d_w - b_w)

    :param aux: mapping or object carrying d_x, d_y, d_w, b_x, b_y, b_w.
    """
    params = ctx.params
    check_same_shape(*(_aux(aux, name) for name in AUXILIARY_NAMES), shape=ctx.shape)
    rhs = np.zeros(ctx.shape, dtype=np.complex128)
    if params.mu:
        rhs += params.mu * adjoint_sum(y, ctx)
    if params.lam:
        rhs += params.lam * (
            dx_adj(_aux(aux, "d_x") - _aux(aux, "b_x")) + dy_adj(_aux(aux, "d_y") - _aux(aux, "b_y"))
        )
    if params.gamma:
        rhs += params.gamma * idwt2(_aux(aux, "d_w") - _aux(aux, "b_w"), ctx.wavelet)
    return rhs


def zero_auxiliaries(ctx: EncodingContext) -> dict:
    return {name: np.zeros(ctx.shape, dtype=np.complex128) for name in AUXILIARY_NAMES}
