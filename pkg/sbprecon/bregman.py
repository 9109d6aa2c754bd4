"""Split Bregman iteration for the combined PI + CS objective."""

import dataclasses
import logging
import time
import typing

import numpy as np

from .encoding import EncodingContext, apply_A, build_rhs, forward
from .exceptions import DimensionMismatch, InvalidParameter
from .models import ConvergenceLog, PreconditionerType, SolveRecord
from .precondfactories import PreconditionerFactory
from .solver import pcg
from .transforms import dwt2, dx, dy, ifft2
from .types import CoilSet, ComplexImage


def shrink(z: np.ndarray, t: float) -> np.ndarray:
    """Complex soft threshold z max(|z| - t, 0) / |z|, with 0 mapped to 0."""
    if t < 0:
        raise InvalidParameter(f"shrink threshold must be nonnegative, got {t}")
    z = np.asarray(z)
    magnitude = np.abs(z)
    scale = np.maximum(magnitude - t, 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(magnitude > 0, z * (scale / np.where(magnitude > 0, magnitude, 1)), 0)
    return out.astype(np.result_type(z, np.complex128))


@dataclasses.dataclass
class BregmanState:
    x: ComplexImage
    d_x: ComplexImage
    d_y: ComplexImage
    d_w: ComplexImage
    b_x: ComplexImage
    b_y: ComplexImage
    b_w: ComplexImage
    y: CoilSet
    y_initial: CoilSet


def init_state(y: CoilSet, ctx: EncodingContext) -> BregmanState:
    """Root-sum-of-squares of the zero-filled coil images as x, every auxiliary zero."""
    y = np.asarray(y, dtype=np.complex128)
    if y.shape != ctx.sens.shape:
        raise DimensionMismatch(f"k-space shape {y.shape} does not match sensitivities {ctx.sens.shape}")
    rss = np.sqrt(np.sum(np.abs(ifft2(y)) ** 2, axis=0))
    zeros = [np.zeros(ctx.shape, dtype=np.complex128) for _ in range(6)]
    return BregmanState(rss.astype(np.complex128), *zeros, y=y.copy(), y_initial=y.copy())


def data_residual(x: ComplexImage, y_initial: CoilSet, ctx: EncodingContext) -> float:
    """sum_i ||R F S_i x - y_i||^2 against the measured data."""
    return float(np.sum(np.abs(forward(x, ctx) - y_initial) ** 2))


def _shrink_stage(state: BregmanState, ctx: EncodingContext):
    params = ctx.params
    if params.lam:
        grad_x, grad_y = dx(state.x), dy(state.x)
        state.d_x = shrink(grad_x + state.b_x, 1 / params.lam)
        state.d_y = shrink(grad_y + state.b_y, 1 / params.lam)
        state.b_x = state.b_x + grad_x - state.d_x
        state.b_y = state.b_y + grad_y - state.d_y
    if params.gamma:
        coeffs = dwt2(state.x, ctx.wavelet)
        state.d_w = shrink(coeffs + state.b_w, 1 / params.gamma)
        state.b_w = state.b_w + coeffs - state.d_w


def run(
    y: CoilSet,
    ctx: EncodingContext,
    precond_kind: typing.Union[PreconditionerType, str] = PreconditionerType.CIRCULANT,
    callback: typing.Optional[typing.Callable[[int, ComplexImage], None]] = None,
    factory: typing.Optional[PreconditionerFactory] = None,
) -> typing.Tuple[ComplexImage, ConvergenceLog]:
    """
    n_outer outer iterations of n_inner warm-started PCG solves each, followed by data feedback.

    The preconditioner is built once before the loop; its build time is kept on the log.
    :param callback: called with (outer, x) after each outer iteration.
    """
    params = ctx.params
    state = init_state(y, ctx)
    precond = (factory or PreconditionerFactory()).create(ctx, precond_kind)
    log = ConvergenceLog(
        precond_kind=str(precond.get_preconditioner_type()),
        precond_build_s=precond.build_seconds,
    )
    operator = precond.as_operator()

    def system(v):
        return apply_A(v, ctx)

    logging.debug(
        "Start split bregman",
        extra={"precond": log.precond_kind, "n_outer": params.n_outer, "n_inner": params.n_inner},
    )
    for outer in range(1, params.n_outer + 1):
        for inner in range(1, params.n_inner + 1):
            started = time.perf_counter()
            b = build_rhs(state.y, state, ctx)
            rhs_s = time.perf_counter() - started

            started = time.perf_counter()
            result = pcg(
                system, b, x0=state.x, M=operator, eps=params.epsilon, max_iters=params.max_pcg_iters
            )
            pcg_s = time.perf_counter() - started
            state.x = result.solution

            started = time.perf_counter()
            _shrink_stage(state, ctx)
            shrink_s = time.perf_counter() - started

            log.append(
                SolveRecord(
                    outer=outer,
                    inner=inner,
                    pcg_iterations=result.iterations,
                    relative_residuals=result.relative_residuals,
                    converged=result.converged,
                    rhs_s=rhs_s,
                    pcg_s=pcg_s,
                    shrink_s=shrink_s,
                )
            )

        started = time.perf_counter()
        state.y = state.y + state.y_initial - forward(state.x, ctx)
        log.set_feedback_seconds(time.perf_counter() - started)

        logging.debug(
            "Outer iteration done",
            extra={"outer": outer, "pcg_iters": log.iterations_per_outer()[-1], "precond": log.precond_kind},
        )
        if callback is not None:
            callback(outer, state.x)

    return state.x, log.freeze()
