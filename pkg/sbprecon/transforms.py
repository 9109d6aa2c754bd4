"""Unitary 2-D DFT, periodic first differences and the periodized orthogonal wavelet.

All transforms act on the last two axes, so a coil set of shape (Nc, m, n) is
transformed plane by plane. The DFT is not centered: DC sits at index (0, 0).
"""

import dataclasses
import functools
import math

import numpy as np
import pywt

from .exceptions import DimensionNotDivisible, InvalidParameter
from .types import ComplexImage


def fft2(img: np.ndarray) -> np.ndarray:
    return np.fft.fft2(img, norm="ortho")


def ifft2(img: np.ndarray) -> np.ndarray:
    return np.fft.ifft2(img, norm="ortho")


def dx(img: np.ndarray) -> np.ndarray:
    """x[i, j] - x[i-1, j] with periodic wrap along the rows (foot-head)."""
    return img - np.roll(img, 1, axis=-2)


def dy(img: np.ndarray) -> np.ndarray:
    return img - np.roll(img, 1, axis=-1)


def dx_adj(img: np.ndarray) -> np.ndarray:
    return img - np.roll(img, -1, axis=-2)


def dy_adj(img: np.ndarray) -> np.ndarray:
    return img - np.roll(img, -1, axis=-1)


def tv_normal(img: np.ndarray) -> np.ndarray:
    """D_x^H D_x + D_y^H D_y applied to img."""
    return dx_adj(dx(img)) + dy_adj(dy(img))


def laplacian_first_row(m: int, n: int) -> ComplexImage:
    """First row t_1 of the periodic normal operator D_x^H D_x + D_y^H D_y, reshaped m x n."""
    if m < 2 or n < 2:
        raise InvalidParameter(f"periodic differences need m, n >= 2, got {m}x{n}")
    row = np.zeros((m, n), dtype=np.complex128)
    row[0, 0] = 4
    # Offsets coincide under the wrap when m or n is 2, so accumulate.
    for i, j in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        row[i % m, j % n] -= 1
    return row


@dataclasses.dataclass(frozen=True)
class WaveletSpec:
    """Periodized orthonormal wavelet; ``db2`` is the 4-tap Daubechies D4 filter."""

    name: str = "db2"
    levels: int = 4

    def __post_init__(self):
        if int(self.levels) != self.levels or self.levels < 1:
            raise InvalidParameter(f"wavelet levels must be a positive integer, got {self.levels}")
        try:
            wavelet = pywt.Wavelet(self.name)
        except ValueError:
            raise InvalidParameter(f"unknown wavelet {self.name!r}")
        if not wavelet.orthogonal:
            raise InvalidParameter(f"wavelet {self.name} is not orthogonal")
        taps = np.asarray(wavelet.dec_lo)
        if abs(np.sum(taps**2) - 1) > 1e-12 or abs(np.sum(taps) - math.sqrt(2)) > 1e-12:
            raise InvalidParameter(f"wavelet {self.name} does not have an orthonormal scaling filter")

    @property
    def filter_taps(self) -> tuple:
        return tuple(pywt.Wavelet(self.name).dec_lo)

    @property
    def boundary(self) -> str:
        return "periodization"

    def check(self, m: int, n: int):
        block = 2**self.levels
        if m % block or n % block:
            raise DimensionNotDivisible(f"{m}x{n} is not divisible by 2^{self.levels} = {block}")


@functools.lru_cache(maxsize=32)
def _coefficient_slices(m: int, n: int, name: str, levels: int):
    coeffs = pywt.wavedec2(np.zeros((m, n)), name, mode="periodization", level=levels)
    _, slices = pywt.coeffs_to_array(coeffs)
    return slices


def _dwt2_real(plane: np.ndarray, spec: WaveletSpec) -> np.ndarray:
    coeffs = pywt.wavedec2(plane, spec.name, mode="periodization", level=spec.levels)
    array, _ = pywt.coeffs_to_array(coeffs)
    return array


def _idwt2_real(array: np.ndarray, spec: WaveletSpec) -> np.ndarray:
    slices = _coefficient_slices(array.shape[0], array.shape[1], spec.name, spec.levels)
    coeffs = pywt.array_to_coeffs(array, slices, output_format="wavedec2")
    return pywt.waverec2(coeffs, spec.name, mode="periodization")


def dwt2(img: np.ndarray, spec: WaveletSpec) -> ComplexImage:
    """Multi-level coefficients packed in an m x n array, coarsest approximation at the top left."""
    img = np.asarray(img)
    spec.check(*img.shape[-2:])
    return _dwt2_real(img.real, spec) + 1j * _dwt2_real(img.imag, spec)


def idwt2(coeffs: np.ndarray, spec: WaveletSpec) -> ComplexImage:
    coeffs = np.asarray(coeffs)
    spec.check(*coeffs.shape[-2:])
    return _idwt2_real(coeffs.real, spec) + 1j * _idwt2_real(coeffs.imag, spec)


def approximation_shape(m: int, n: int, spec: WaveletSpec) -> tuple:
    """Shape of the coarsest approximation block inside the packed coefficient array."""
    return m >> spec.levels, n >> spec.levels
