"""Preconditioned conjugate gradients for Hermitian positive definite matrix-free operators."""

import dataclasses
import logging
import math
import typing

import numpy as np

from .exceptions import DimensionMismatch, IndefinitenessDetected, NonFiniteBreakdown
from .types import ApplyOperator, ComplexImage


@dataclasses.dataclass(frozen=True)
class PcgResult:
    solution: ComplexImage
    iterations: int
    relative_residuals: typing.Tuple[float, ...]
    converged: bool

    @property
    def final_relres(self) -> float:
        return self.relative_residuals[-1]


def _inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u, v> = sum conj(u) v."""
    return np.vdot(u, v)


def _finite(*values) -> bool:
    return all(math.isfinite(abs(value)) for value in values)


def pcg(
    apply_A: ApplyOperator,
    b: ComplexImage,
    x0: typing.Optional[ComplexImage] = None,
    M: typing.Optional[ApplyOperator] = None,
    eps: float = 1e-3,
    max_iters: int = 1000,
) -> PcgResult:
    """
    Solve A x = b with the preconditioner applied once per iteration to the residual.

    :param M: applies M^{-1}; None runs plain CG.
    :return: relative_residuals[0] = ||b - A x0|| / ||b||, one entry per iteration after it.
    """
    b = np.asarray(b, dtype=np.complex128)
    b_norm = float(np.linalg.norm(b))
    if b_norm == 0:
        return PcgResult(np.zeros_like(b), 0, (0.0,), True)
    if x0 is None:
        x = np.zeros_like(b)
        r = b.copy()
    else:
        if np.shape(x0) != b.shape:
            raise DimensionMismatch(f"initial guess shape {np.shape(x0)} does not match {b.shape}")
        x = np.array(x0, dtype=np.complex128, copy=True)
        r = b - apply_A(x)

    residuals = [float(np.linalg.norm(r)) / b_norm]
    if not _finite(residuals[0]):
        raise NonFiniteBreakdown("initial residual is not finite")
    if residuals[0] <= eps:
        return PcgResult(x, 0, tuple(residuals), True)

    z = r.copy() if M is None else M(r)
    p = z.copy()
    rz = _inner(r, z).real
    iterations = 0
    converged = False
    while iterations < max_iters:
        Ap = apply_A(p)
        pAp = _inner(p, Ap).real
        if not _finite(pAp, rz):
            raise NonFiniteBreakdown(f"non-finite inner product at iteration {iterations + 1}")
        if pAp <= 0:
            raise IndefinitenessDetected(f"<p, Ap> = {pAp!r} at iteration {iterations + 1}")
        alpha = rz / pAp
        x = x + alpha * p
        r = r - alpha * Ap
        iterations += 1
        residuals.append(float(np.linalg.norm(r)) / b_norm)
        if not _finite(residuals[-1]):
            raise NonFiniteBreakdown(f"non-finite residual at iteration {iterations}")
        if residuals[-1] <= eps:
            converged = True
            break
        z = r.copy() if M is None else M(r)
        rz_next = _inner(r, z).real
        beta = rz_next / rz
        rz = rz_next
        p = z + beta * p

    if not converged:
        logging.warning(
            "PCG hit the iteration cap",
            extra={"max_iters": max_iters, "relres": residuals[-1], "eps": eps},
        )
    return PcgResult(x, iterations, tuple(residuals), converged)
