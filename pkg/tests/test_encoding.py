import numpy as np
import pytest

from helpers import make_ctx, random_image, random_sens
from sbprecon.encoding import (
    AUXILIARY_NAMES,
    EncodingContext,
    adjoint_coil,
    adjoint_sum,
    apply_A,
    build_rhs,
    forward,
    forward_coil,
    zero_auxiliaries,
)
from sbprecon.exceptions import CoilIndexOutOfRange, DimensionMismatch, DimensionNotDivisible
from sbprecon.models import ReconParams, SamplingMask
from sbprecon.oracle import dense_A, dense_dft, dense_operator
from sbprecon.transforms import dx, dx_adj, dy, dy_adj, fft2, idwt2


def test_context_promotes_single_coil(rng):
    ctx = make_ctx(random_image(rng, 8, 8), SamplingMask.full(8, 8))
    assert ctx.ncoils == 1
    assert ctx.sens.shape == (1, 8, 8)


def test_context_rejects_mismatch(rng):
    with pytest.raises(DimensionMismatch):
        make_ctx(random_sens(rng, 2, 8, 8), SamplingMask.full(8, 4))


def test_context_checks_wavelet_divisibility(rng):
    with pytest.raises(DimensionNotDivisible):
        EncodingContext(random_sens(rng, 2, 8, 8), SamplingMask.full(8, 8), ReconParams(wavelet_levels=4))


def test_forward_full_sampling_single_ones_coil(rng):
    x = random_image(rng, 4, 4)
    ctx = make_ctx(np.ones((4, 4)), SamplingMask.full(4, 4))
    assert np.allclose(forward_coil(x, ctx, 1), fft2(x))


def test_forward_applies_mask(small_ctx, rng):
    y = forward_coil(random_image(rng, 8, 8), small_ctx, 2)
    assert np.all(y[small_ctx.r == 0] == 0)


def test_coil_index_is_one_based(small_ctx, rng):
    x = random_image(rng, 8, 8)
    forward_coil(x, small_ctx, 3)
    with pytest.raises(CoilIndexOutOfRange):
        forward_coil(x, small_ctx, 0)
    with pytest.raises(CoilIndexOutOfRange):
        adjoint_coil(x, small_ctx, 4)


def test_image_dimension_mismatch(small_ctx):
    with pytest.raises(DimensionMismatch):
        forward_coil(np.ones((4, 4)), small_ctx, 1)


@pytest.mark.parametrize("coil", [1, 2, 3])
def test_adjoint_coil_matches_dense(small_ctx, coil):
    forward_dense = dense_operator(lambda v: forward_coil(v, small_ctx, coil), 8, 8)
    adjoint_dense = dense_operator(lambda v: adjoint_coil(v, small_ctx, coil), 8, 8)
    assert np.abs(forward_dense.conj().T - adjoint_dense).max() <= 1e-12


def test_adjoint_inner_product(small_ctx, rng):
    x, v = random_image(rng, 8, 8), random_image(rng, 8, 8)
    assert np.vdot(forward_coil(x, small_ctx, 2), v) == pytest.approx(
        np.vdot(x, adjoint_coil(v, small_ctx, 2)), rel=1e-12
    )


def test_all_coil_forms_agree(small_ctx, rng):
    x = random_image(rng, 8, 8)
    y = forward(x, small_ctx)
    assert np.allclose(y[1], forward_coil(x, small_ctx, 2))
    expected = sum(adjoint_coil(y[i - 1], small_ctx, i) for i in range(1, 4))
    assert np.allclose(adjoint_sum(y, small_ctx), expected)


def test_apply_A_is_hermitian_positive_definite(small_ctx):
    matrix = dense_A(small_ctx)
    assert np.abs(matrix - matrix.conj().T).max() <= 1e-12 * np.abs(matrix).max()
    assert np.linalg.eigvalsh(matrix).min() >= small_ctx.params.gamma * (1 - 1e-9)


def test_apply_A_matches_independent_dense_matrix(small_ctx, rng):
    m, n = small_ctx.shape
    params = small_ctx.params
    dft = dense_dft(m, n)
    sampling = np.diag(small_ctx.mask.cells.ravel().astype(float))
    matrix = params.gamma * np.eye(m * n, dtype=np.complex128)
    for s in small_ctx.sens:
        encode = sampling @ dft @ np.diag(s.ravel())
        matrix += params.mu * encode.conj().T @ encode
    for difference in (dx, dy):
        dense = dense_operator(difference, m, n)
        matrix += params.lam * dense.conj().T @ dense
    x = random_image(rng, m, n)
    assert np.abs(apply_A(x, small_ctx).ravel() - matrix @ x.ravel()).max() <= 1e-10 * np.abs(matrix).max()
    assert np.abs(dense_A(small_ctx) - matrix).max() <= 1e-10 * np.abs(matrix).max()


def test_apply_A_gamma_only(rng):
    ctx = make_ctx(random_sens(rng, 2, 8, 8), SamplingMask.full(8, 8), mu=0.0, lam=0.0, gamma=2.5)
    x = random_image(rng, 8, 8)
    assert np.allclose(apply_A(x, ctx), 2.5 * x)


def test_apply_A_pi_only_full_sampling(rng):
    """mu sum_i S_i^H S_i x when every cell is sampled."""
    sens = random_sens(rng, 2, 8, 8)
    ctx = make_ctx(sens, SamplingMask.full(8, 8), mu=1.0, lam=0.0, gamma=0.0)
    x = random_image(rng, 8, 8)
    assert np.allclose(apply_A(x, ctx), np.sum(np.abs(sens) ** 2, axis=0) * x)


def test_rhs_with_zero_auxiliaries_is_scaled_adjoint(small_ctx, rng):
    y = forward(random_image(rng, 8, 8), small_ctx)
    rhs = build_rhs(y, zero_auxiliaries(small_ctx), small_ctx)
    assert np.allclose(rhs, small_ctx.params.mu * adjoint_sum(y, small_ctx))


def test_rhs_terms(small_ctx, rng):
    aux = {name: random_image(rng, 8, 8) for name in AUXILIARY_NAMES}
    y = np.zeros((3, 8, 8), dtype=complex)
    params = small_ctx.params
    expected = params.lam * (dx_adj(aux["d_x"] - aux["b_x"]) + dy_adj(aux["d_y"] - aux["b_y"]))
    expected = expected + params.gamma * idwt2(aux["d_w"] - aux["b_w"], small_ctx.wavelet)
    assert np.allclose(build_rhs(y, aux, small_ctx), expected)


def test_rhs_rejects_mismatched_auxiliary(small_ctx):
    aux = zero_auxiliaries(small_ctx)
    aux["d_x"] = np.zeros((4, 4))
    with pytest.raises(DimensionMismatch):
        build_rhs(np.zeros((3, 8, 8)), aux, small_ctx)
