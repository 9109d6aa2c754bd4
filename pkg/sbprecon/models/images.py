import dataclasses
import typing

import numpy as np

from ..exceptions import DimensionMismatch, InvalidParameter, NonFiniteValue
from ..types import CoilSet, ComplexImage
from .enum import MaskKind


def validate(data, rows: typing.Optional[int] = None, cols: typing.Optional[int] = None) -> ComplexImage:
    """
    :param data: an (m, n) array, or a flat row-major sequence when rows and cols are given.
    :return: the data as an (m, n) complex128 array.
    """
    array = np.asarray(data, dtype=np.complex128)
    if rows is not None or cols is not None:
        if rows is None or cols is None or rows <= 0 or cols <= 0:
            raise DimensionMismatch(f"declared dimensions {rows}x{cols} are not positive")
        if array.size != rows * cols or (array.ndim == 2 and array.shape != (rows, cols)):
            raise DimensionMismatch(
                f"declared {rows}x{cols} needs {rows * cols} values, got {array.size} (shape {array.shape})"
            )
        array = array.reshape(rows, cols)
    if array.ndim != 2 or array.shape[0] <= 0 or array.shape[1] <= 0:
        raise DimensionMismatch(f"image must be a non-empty 2-D grid, got shape {array.shape}")
    _check_finite(array)
    return array


def _check_finite(array: np.ndarray):
    finite = np.isfinite(array.real) & np.isfinite(array.imag)
    if not finite.all():
        index = tuple(int(i) for i in np.argwhere(~finite)[0])
        raise NonFiniteValue(f"non-finite value at index {index}")


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def as_image(data, rows: typing.Optional[int] = None, cols: typing.Optional[int] = None) -> ComplexImage:
    """Validated read-only copy."""
    return _freeze(np.array(validate(data, rows, cols), dtype=np.complex128, copy=True))


def as_coilset(images) -> CoilSet:
    """Stack coil images into a read-only (Nc, m, n) array; rejects mixed dimensions."""
    planes = list(images)
    if not planes:
        raise DimensionMismatch("a coil set needs at least one coil")
    validated = [validate(plane) for plane in planes]
    shape = validated[0].shape
    for index, plane in enumerate(validated):
        if plane.shape != shape:
            raise DimensionMismatch(f"coil {index + 1} has shape {plane.shape}, expected {shape}")
    return _freeze(np.stack(validated).astype(np.complex128, copy=False))


def check_same_shape(*arrays: np.ndarray, shape: typing.Optional[tuple] = None):
    expected = shape if shape is not None else arrays[0].shape[-2:]
    for array in arrays:
        if array.shape[-2:] != tuple(expected):
            raise DimensionMismatch(f"expected trailing shape {tuple(expected)}, got {array.shape}")


@dataclasses.dataclass(frozen=True)
class SamplingMask:
    """The diagonal r of the binary sampling matrix R, reshaped m x n, DC at index 0."""

    cells: np.ndarray
    target_r: float = 1.0
    kind: MaskKind = MaskKind.CARTESIAN_LINES
    seed: int = 0
    center_fraction: float = 0.0

    def __post_init__(self):
        cells = np.asarray(self.cells)
        if np.iscomplexobj(cells):
            if np.any(cells.imag != 0):
                raise InvalidParameter("mask cells must be real 0/1 values")
            cells = cells.real
        cells = np.array(cells, dtype=np.float64, copy=True)
        if cells.ndim != 2:
            raise DimensionMismatch(f"mask must be 2-D, got shape {cells.shape}")
        if not np.all((cells == 0) | (cells == 1)):
            raise InvalidParameter("mask cells must be exactly 0 or 1")
        if not cells.any():
            raise InvalidParameter("mask must sample at least one cell")
        if self.target_r <= 0:
            raise InvalidParameter(f"target R must be positive, got {self.target_r}")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidParameter(f"seed must fit in 64 unsigned bits, got {self.seed}")
        object.__setattr__(self, "cells", _freeze(cells))
        object.__setattr__(self, "kind", MaskKind(self.kind))

    @property
    def shape(self) -> tuple:
        return self.cells.shape

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    @property
    def sampled(self) -> int:
        return int(self.cells.sum())

    @property
    def sampled_fraction(self) -> float:
        return self.sampled / self.cells.size

    @property
    def achieved_r(self) -> float:
        return self.cells.size / self.sampled

    @classmethod
    def full(cls, m: int, n: int) -> "SamplingMask":
        return cls(np.ones((m, n)))
