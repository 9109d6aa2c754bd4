"""Dense brute-force matrices for small grids.

Everything here is O(N^2) in memory and is meant for tests and acceptance checks only. Images are
vectorized row-major, so the dense 2-D DFT is the Kronecker product of the 1-D row and column DFTs.
"""

import math
import typing

import numpy as np
from scipy import linalg

from .encoding import EncodingContext, apply_A
from .exceptions import DimensionMismatch, NotPositiveDefinite, SizeCapExceeded
from .types import ApplyOperator, ComplexImage


SIZE_CAP = 4096


def _check_size(m: int, n: int):
    if m * n > SIZE_CAP:
        raise SizeCapExceeded(f"dense matrices are capped at N = {SIZE_CAP}, got {m}x{n} = {m * n}")


def dft_matrix(size: int) -> np.ndarray:
    """Unitary 1-D DFT from explicit exponentials."""
    k = np.arange(size)
    return np.exp(-2j * np.pi * np.outer(k, k) / size) / math.sqrt(size)


def dense_dft(m: int, n: int) -> np.ndarray:
    _check_size(m, n)
    return np.kron(dft_matrix(m), dft_matrix(n))


def dense_operator(apply_op: ApplyOperator, m: int, n: int) -> np.ndarray:
    """Column j is apply_op(e_j) for the j-th standard basis image."""
    _check_size(m, n)
    size = m * n
    matrix = np.empty((size, size), dtype=np.complex128)
    basis = np.zeros((m, n), dtype=np.complex128)
    for j in range(size):
        basis.flat[j] = 1
        matrix[:, j] = np.asarray(apply_op(basis)).ravel()
        basis.flat[j] = 0
    return matrix


def dense_A(ctx: EncodingContext) -> np.ndarray:
    return dense_operator(lambda v: apply_A(v, ctx), *ctx.shape)


def dense_K(ctx: EncodingContext) -> np.ndarray:
    """K = F A F^H."""
    dft = dense_dft(*ctx.shape)
    return dft @ dense_A(ctx) @ dft.conj().T


def dense_K_diag(ctx: EncodingContext) -> ComplexImage:
    return np.diag(dense_K(ctx)).reshape(ctx.shape).copy()


def dense_solve(ctx: EncodingContext, b: ComplexImage) -> ComplexImage:
    """Cholesky solve of the dense A."""
    b = np.asarray(b, dtype=np.complex128)
    if b.shape != ctx.shape:
        raise DimensionMismatch(f"right-hand side {b.shape} does not match context {ctx.shape}")
    matrix = dense_A(ctx)
    matrix = (matrix + matrix.conj().T) / 2
    try:
        factor = linalg.cho_factor(matrix, lower=True)
    except linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"dense A has no Cholesky factor: {e}")
    return linalg.cho_solve(factor, b.ravel()).reshape(ctx.shape)


def _grid_shape(matrix: np.ndarray, shape: typing.Optional[tuple]) -> tuple:
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise DimensionMismatch(f"expected a square matrix, got {matrix.shape}")
    if shape is None:
        side = math.isqrt(size)
        if side * side != size:
            raise DimensionMismatch(f"pass the grid shape for a non-square grid of {size} pixels")
        shape = (side, side)
    if shape[0] * shape[1] != size:
        raise DimensionMismatch(f"grid {shape} does not match a {size}x{size} matrix")
    return tuple(shape)


def offdiag_fraction(matrix: np.ndarray) -> float:
    """||M - diag(M)||_F / ||M||_F."""
    total = np.linalg.norm(matrix)
    if total == 0:
        return 0.0
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))) / total)


def is_bccb(matrix: np.ndarray, shape: typing.Optional[tuple] = None, tol: float = 1e-10) -> bool:
    """A matrix is BCCB iff F M F^H is diagonal; off-diagonal entries are compared to tol * ||M||_F."""
    m, n = _grid_shape(np.asarray(matrix), shape)
    dft = dense_dft(m, n)
    transformed = dft @ matrix @ dft.conj().T
    off = transformed - np.diag(np.diag(transformed))
    return bool(np.abs(off).max() <= tol * max(np.linalg.norm(matrix), np.finfo(float).tiny))
