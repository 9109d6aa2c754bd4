"""Closed-form FLOP counts for building and applying the circulant preconditioner and for applying A.

Logarithms are base two, counted exactly on integer powers of two.
"""

import dataclasses
import typing

from .exceptions import InvalidParameter, NonPowerOfTwo
from .types import PathLike
from .utils import write_csv


COST_COLUMNS = ("N", "flops_M", "flops_A", "flops_combined")


def _log2(size: int) -> int:
    if int(size) != size or size < 1 or int(size) & (int(size) - 1):
        raise NonPowerOfTwo(f"N must be a power of two, got {size}")
    return int(size).bit_length() - 1


def _check_coils(ncoils: int):
    if int(ncoils) != ncoils or ncoils < 1:
        raise InvalidParameter(f"Nc must be a positive integer, got {ncoils}")


def flops_build_precond(size: int, ncoils: int) -> int:
    """(3 + 2 Nc) N + (4 + Nc) N log N"""
    log_n = _log2(size)
    _check_coils(ncoils)
    size, ncoils = int(size), int(ncoils)
    return (3 + 2 * ncoils) * size + (4 + ncoils) * size * log_n


def flops_apply_A(size: int, ncoils: int) -> int:
    """(6 + 4 Nc) N + 2 Nc N log N"""
    log_n = _log2(size)
    _check_coils(ncoils)
    size, ncoils = int(size), int(ncoils)
    return (6 + 4 * ncoils) * size + 2 * ncoils * size * log_n


def flops_apply_precond(size: int) -> int:
    """N + 2 N log N: one pointwise division between a forward and an inverse FFT."""
    log_n = _log2(size)
    size = int(size)
    return size + 2 * size * log_n


def overhead_limit(ncoils: int) -> float:
    """Limit of flops_apply_precond / flops_apply_A for large N."""
    _check_coils(ncoils)
    return 1 / ncoils


@dataclasses.dataclass(frozen=True)
class CostPoint:
    N: int
    flops_M: int
    flops_A: int
    flops_combined: int
    ratio: float


def cost_point(size: int, ncoils: int) -> CostPoint:
    flops_m = flops_apply_precond(size)
    flops_a = flops_apply_A(size, ncoils)
    return CostPoint(
        N=int(size),
        flops_M=flops_m,
        flops_A=flops_a,
        flops_combined=flops_m + flops_a,
        ratio=flops_m / flops_a,
    )


def cost_ratio_curve(nc_fixed: int, n_range: typing.Iterable[int]) -> typing.List[CostPoint]:
    """Preconditioner, A and combined per-iteration cost over a grid of problem sizes."""
    return [cost_point(size, nc_fixed) for size in n_range]


def write_cost_csv(points: typing.Sequence[CostPoint], path: PathLike):
    rows = [[point.N, point.flops_M, point.flops_A, point.flops_combined] for point in points]
    write_csv(path, COST_COLUMNS, rows)
