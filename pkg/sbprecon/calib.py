"""Synthetic ground truth, simulated coil sensitivities, normalization and SVD coil compression."""

import dataclasses
import logging
import math
import typing

import numpy as np
from scipy import ndimage

from .exceptions import DegenerateSupport, DimensionMismatch, InvalidParameter, KeepOutOfRange
from .models import CoilLayout, PhantomKind, SamplingMask
from .models.images import as_coilset
from .transforms import fft2, ifft2
from .types import CoilSet, ComplexImage


# [intensity, a, b, x0, y0, phi in degrees] on the [-1, 1]^2 box; Toft's contrast-enhanced head.
MODIFIED_SHEPP_LOGAN = (
    (1.00, 0.6900, 0.920, 0.00, 0.0000, 0),
    (-0.80, 0.6624, 0.874, 0.00, -0.0184, 0),
    (-0.20, 0.1100, 0.310, 0.22, 0.0000, -18),
    (-0.20, 0.1600, 0.410, -0.22, 0.0000, 18),
    (0.10, 0.2100, 0.250, 0.00, 0.3500, 0),
    (0.10, 0.0460, 0.046, 0.00, 0.1000, 0),
    (0.10, 0.0460, 0.046, 0.00, -0.1000, 0),
    (0.10, 0.0460, 0.023, -0.08, -0.6050, 0),
    (0.10, 0.0230, 0.023, 0.00, -0.6060, 0),
    (0.10, 0.0230, 0.046, 0.06, -0.6050, 0),
)


@dataclasses.dataclass(frozen=True)
class PhantomSpec:
    kind: PhantomKind = PhantomKind.SHEPP_LOGAN
    m: int = 256
    n: int = 256
    noise_std: float = 0.0
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", PhantomKind(str(self.kind)))
        except ValueError:
            raise InvalidParameter(f"unknown phantom {self.kind!r}, expected one of {PhantomKind.choices()}")
        if self.m < 2 or self.n < 2:
            raise InvalidParameter(f"phantom size must be at least 2x2, got {self.m}x{self.n}")
        if self.noise_std < 0:
            raise InvalidParameter(f"noise std must be nonnegative, got {self.noise_std}")


@dataclasses.dataclass(frozen=True)
class CoilSimSpec:
    ncoils: int = 12
    layout: CoilLayout = CoilLayout.RING
    gaussian_width: float = 0.5
    phase_gradient: float = math.pi
    support_threshold: float = 0.05
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "layout", CoilLayout(str(self.layout)))
        except ValueError:
            raise InvalidParameter(
                f"unknown coil layout {self.layout!r}, expected one of {CoilLayout.choices()}"
            )
        if self.ncoils < 1:
            raise InvalidParameter(f"ncoils must be at least 1, got {self.ncoils}")
        if not self.gaussian_width > 0:
            raise InvalidParameter(f"gaussian width must be positive, got {self.gaussian_width}")
        if not 0 <= self.support_threshold < 1:
            raise InvalidParameter(f"support threshold must lie in [0, 1), got {self.support_threshold}")


def _grid(m: int, n: int) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Row (foot-head) and column coordinates on [-1, 1]."""
    return np.mgrid[-1 : 1 : 1j * m, -1 : 1 : 1j * n]


def _shepp_logan(m: int, n: int) -> np.ndarray:
    rows, cols = _grid(m, n)
    image = np.zeros((m, n))
    for intensity, a, b, x0, y0, phi in MODIFIED_SHEPP_LOGAN:
        # x runs along the columns, y along the rows, as in the usual head orientation.
        x, y = cols - x0, rows - y0
        cos_p, sin_p = math.cos(math.radians(phi)), math.sin(math.radians(phi))
        inside = ((x * cos_p + y * sin_p) ** 2) / a**2 + ((y * cos_p - x * sin_p) ** 2) / b**2 <= 1
        image[inside] += intensity
    return np.clip(image, 0, 1)


def _blobs(m: int, n: int, rng: np.random.Generator, count: int = 8) -> np.ndarray:
    rows, cols = _grid(m, n)
    image = np.zeros((m, n))
    for _ in range(count):
        center = rng.uniform(-0.6, 0.6, size=2)
        width = rng.uniform(0.05, 0.25)
        amplitude = rng.uniform(0.3, 1.0)
        distance2 = (rows - center[0]) ** 2 + (cols - center[1]) ** 2
        blob = amplitude * np.exp(-distance2 / (2 * width**2))
        # Truncated at three widths so the background is exactly zero.
        blob[distance2 > (3 * width) ** 2] = 0
        image += blob
    return image


def make_phantom(spec: PhantomSpec) -> ComplexImage:
    """Deterministic phantom with maximum magnitude 1, optionally with complex white noise."""
    rng = np.random.default_rng(spec.seed)
    if spec.kind == PhantomKind.SHEPP_LOGAN:
        image = _shepp_logan(spec.m, spec.n)
    else:
        image = _blobs(spec.m, spec.n, rng)
    peak = image.max()
    if peak > 0:
        image = image / peak
    image = image.astype(np.complex128)
    if spec.noise_std:
        image = image + spec.noise_std * (
            rng.standard_normal(image.shape) + 1j * rng.standard_normal(image.shape)
        ) / math.sqrt(2)
        magnitude = np.abs(image)
        image = np.where(magnitude > 1, image / np.maximum(magnitude, 1), image)
    return image


def _coil_centers(spec: CoilSimSpec) -> np.ndarray:
    if spec.layout == CoilLayout.RING:
        angles = 2 * np.pi * np.arange(spec.ncoils) / spec.ncoils
        return 1.2 * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    # Posterior array: elements spread along the foot-head rows behind the last column.
    offsets = np.linspace(-0.8, 0.8, spec.ncoils) if spec.ncoils > 1 else np.zeros(1)
    return np.stack([offsets, np.full(spec.ncoils, 1.2)], axis=1)


def simulate_coils(spec: CoilSimSpec, m: int, n: int) -> CoilSet:
    """Gaussian magnitude profiles with a linear phase ramp of ``phase_gradient`` radians across the FOV."""
    rows, cols = _grid(m, n)
    rng = np.random.default_rng(spec.seed)
    sigma = 2 * spec.gaussian_width
    coils = np.empty((spec.ncoils, m, n), dtype=np.complex128)
    for index, (row0, col0) in enumerate(_coil_centers(spec)):
        magnitude = np.exp(-((rows - row0) ** 2 + (cols - col0) ** 2) / (2 * sigma**2))
        direction = rng.uniform(0, 2 * np.pi)
        cos_d, sin_d = math.cos(direction), math.sin(direction)
        # Normalized by the extent of the square FOV along the ramp direction.
        phase = spec.phase_gradient * (cos_d * rows + sin_d * cols) / (2 * (abs(cos_d) + abs(sin_d)))
        coils[index] = magnitude * np.exp(1j * phase)
    logging.debug("Simulate coils", extra={"ncoils": spec.ncoils, "layout": str(spec.layout)})
    return coils


def support_mask(image: np.ndarray, threshold: float = 0.05, fill_holes: bool = True) -> np.ndarray:
    """Pixels whose magnitude exceeds threshold * max, with enclosed holes filled."""
    magnitude = np.abs(image)
    support = magnitude > threshold * magnitude.max()
    if fill_holes:
        support = ndimage.binary_fill_holes(support)
    return support


def normalize_sensitivities(raw: CoilSet, support: typing.Union[np.ndarray, float]) -> CoilSet:
    """
    S_hat_i = [sum_j S_j^H S_j]^{-1/2} S_i on the support and zero outside it.

    :param support: a boolean image, or a threshold applied to sum_j |s_j|^2 relative to its maximum.
    """
    raw = np.asarray(raw, dtype=np.complex128)
    energy = np.sum(np.abs(raw) ** 2, axis=0)
    if np.isscalar(support):
        support = energy > float(support) * energy.max()
    support = np.asarray(support, dtype=bool)
    if support.shape != energy.shape:
        raise DimensionMismatch(f"support {support.shape} does not match sensitivities {energy.shape}")
    if not support.any():
        raise DegenerateSupport("support is empty")
    if np.any(energy[support] <= 0):
        raise DegenerateSupport("sum of |s|^2 vanishes inside the support")
    scale = np.zeros_like(energy)
    scale[support] = 1 / np.sqrt(energy[support])
    return as_coilset(raw * scale)


def normalize_coil_images(images: CoilSet, sens_hat: CoilSet) -> CoilSet:
    """m_i = S_hat_i sum_j S_hat_j^H m_j; a projection when sum |s_hat|^2 is 0 or 1 per pixel."""
    images = np.asarray(images)
    sens_hat = np.asarray(sens_hat)
    if images.shape != sens_hat.shape:
        raise DimensionMismatch(f"images {images.shape} do not match sensitivities {sens_hat.shape}")
    combined = np.sum(np.conj(sens_hat) * images, axis=0)
    return sens_hat * combined


def compression_matrix(images: CoilSet, keep: int) -> np.ndarray:
    """First ``keep`` right-singular vectors of the N x Nc stacked coil images.

    Columns come in descending singular value order, so virtual coil 1 carries the most energy.
    """
    images = np.asarray(images)
    ncoils = images.shape[0]
    if not 1 <= keep <= ncoils:
        raise KeepOutOfRange(f"keep must lie in [1, {ncoils}], got {keep}")
    stacked = images.reshape(ncoils, -1).T
    _, singular_values, vh = np.linalg.svd(stacked, full_matrices=False)
    energy = singular_values**2
    kept = float(energy[:keep].sum() / max(energy.sum(), np.finfo(float).tiny))
    logging.debug("Coil compression", extra={"keep": keep, "energy_kept": kept})
    return vh.conj().T[:, :keep]


def apply_compression(coils: CoilSet, matrix: np.ndarray) -> CoilSet:
    """Virtual coils v = sum_i matrix[i, v] coil_i; works for images, sensitivities and k-space alike."""
    coils = np.asarray(coils)
    if coils.shape[0] != matrix.shape[0]:
        raise DimensionMismatch(f"{coils.shape[0]} coils for a {matrix.shape} compression matrix")
    return np.tensordot(matrix, coils, axes=([0], [0]))


def coil_compress(images: CoilSet, sens_hat: CoilSet, keep: int) -> typing.Tuple[CoilSet, CoilSet]:
    images = np.asarray(images)
    sens_hat = np.asarray(sens_hat)
    if images.shape != sens_hat.shape:
        raise DimensionMismatch(f"images {images.shape} do not match sensitivities {sens_hat.shape}")
    matrix = compression_matrix(images, keep)
    return apply_compression(images, matrix), apply_compression(sens_hat, matrix)


def coil_images(y: CoilSet) -> CoilSet:
    """Zero-filled coil images."""
    return ifft2(y)


def simulate_kspace(
    x: ComplexImage, sens: CoilSet, mask: SamplingMask, noise_std: float = 0.0, seed: int = 0
) -> CoilSet:
    """y_i = R F S_i x (+ complex white noise on the sampled cells)."""
    sens = np.asarray(sens)
    if sens.shape[-2:] != np.shape(x) or mask.shape != np.shape(x):
        raise DimensionMismatch(f"image {np.shape(x)}, sensitivities {sens.shape}, mask {mask.shape}")
    y = mask.cells * fft2(sens * x)
    if noise_std:
        rng = np.random.default_rng(seed)
        noise = rng.standard_normal(y.shape) + 1j * rng.standard_normal(y.shape)
        y = y + mask.cells * noise * noise_std / math.sqrt(2)
    return y
