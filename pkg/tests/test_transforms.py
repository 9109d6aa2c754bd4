import numpy as np
import pytest

from helpers import random_image
from sbprecon.exceptions import DimensionNotDivisible, InvalidParameter
from sbprecon.oracle import dense_dft, dense_operator
from sbprecon.preconditioners import k_d_diag, k_d_diag_from_first_row
from sbprecon.transforms import (
    WaveletSpec,
    approximation_shape,
    dwt2,
    dx,
    dx_adj,
    dy,
    dy_adj,
    fft2,
    idwt2,
    ifft2,
    laplacian_first_row,
    tv_normal,
)


def test_fft_is_unitary(rng):
    x = random_image(rng, 8, 8)
    assert np.linalg.norm(fft2(x)) == pytest.approx(np.linalg.norm(x), rel=1e-12)
    assert np.allclose(ifft2(fft2(x)), x, atol=1e-12)


def test_fft_matches_dense_dft(rng):
    x = random_image(rng, 4, 8)
    assert np.allclose(fft2(x).ravel(), dense_dft(4, 8) @ x.ravel(), atol=1e-12)


def test_fft_delta_is_flat():
    delta = np.zeros((4, 4))
    delta[0, 0] = 1
    assert np.allclose(fft2(delta), 0.25)


def test_fft_acts_on_last_two_axes(rng):
    coils = np.stack([random_image(rng, 4, 4) for _ in range(3)])
    assert np.allclose(fft2(coils)[2], fft2(coils[2]))


def test_dx_is_periodic_first_difference():
    x = np.arange(16, dtype=float).reshape(4, 4)
    assert np.allclose(dx(x)[1:], 4)
    assert np.allclose(dx(x)[0], -12)
    assert np.allclose(dy(x)[:, 1:], 1)
    assert np.allclose(dy(x)[:, 0], -3)


@pytest.mark.parametrize("forward, adjoint", [(dx, dx_adj), (dy, dy_adj)])
def test_difference_adjoints_match_dense(forward, adjoint):
    dense = dense_operator(forward, 8, 8)
    dense_adjoint = dense_operator(adjoint, 8, 8)
    assert np.abs(dense.conj().T - dense_adjoint).max() <= 1e-12


@pytest.mark.parametrize("forward, adjoint", [(dx, dx_adj), (dy, dy_adj)])
def test_difference_adjoint_inner_product(rng, forward, adjoint):
    x, v = random_image(rng, 6, 10), random_image(rng, 6, 10)
    assert np.vdot(forward(x), v) == pytest.approx(np.vdot(x, adjoint(v)), rel=1e-12)


def test_differences_annihilate_constants():
    assert np.allclose(tv_normal(np.full((8, 8), 3 + 1j)), 0)


def test_laplacian_first_row():
    row = laplacian_first_row(4, 4)
    assert row[0, 0] == 4
    assert row[1, 0] == row[3, 0] == row[0, 1] == row[0, 3] == -1
    assert row.sum() == 0


def test_laplacian_first_row_wraps_small_grids():
    row = laplacian_first_row(2, 2)
    assert row[1, 0] == -2 and row[0, 1] == -2


def test_laplacian_first_row_is_row_of_dense_normal():
    dense = dense_operator(tv_normal, 4, 4)
    assert np.allclose(dense[0], laplacian_first_row(4, 4).ravel())


@pytest.mark.parametrize("m, n", [(4, 4), (8, 16), (6, 10)])
def test_kd_closed_form_matches_fft_of_first_row(m, n):
    assert np.abs(k_d_diag(m, n) - k_d_diag_from_first_row(m, n)).max() <= 1e-12


@pytest.mark.parametrize("m, n", [(4, 4), (8, 16), (6, 10)])
def test_tv_normal_is_diagonalized_by_kd(rng, m, n):
    u = random_image(rng, m, n)
    assert np.abs(fft2(tv_normal(u)) - k_d_diag(m, n) * fft2(u)).max() <= 1e-11 * np.abs(fft2(u)).max()


def test_kd_dc_is_zero():
    kd = k_d_diag(8, 8)
    assert kd[0, 0] == 0
    assert kd.real.max() == pytest.approx(8)


def test_differences_need_two_pixels():
    with pytest.raises(InvalidParameter):
        laplacian_first_row(1, 4)


class TestWavelet:
    def test_default_is_four_tap_daubechies(self):
        spec = WaveletSpec()
        assert len(spec.filter_taps) == 4
        assert spec.boundary == "periodization"

    def test_orthogonal(self, rng):
        spec = WaveletSpec(levels=3)
        x = random_image(rng, 16, 16)
        coeffs = dwt2(x, spec)
        assert coeffs.shape == x.shape
        assert np.linalg.norm(coeffs) == pytest.approx(np.linalg.norm(x), rel=1e-12)
        assert np.abs(idwt2(coeffs, spec) - x).max() <= 1e-12

    def test_adjoint_is_inverse(self, rng):
        spec = WaveletSpec(levels=2)
        x, c = random_image(rng, 8, 8), random_image(rng, 8, 8)
        assert np.vdot(dwt2(x, spec), c) == pytest.approx(np.vdot(x, idwt2(c, spec)), rel=1e-12)

    def test_dense_wavelet_is_unitary(self):
        spec = WaveletSpec(levels=2)
        dense = dense_operator(lambda v: dwt2(v, spec), 8, 8)
        assert np.abs(dense.conj().T @ dense - np.eye(64)).max() <= 1e-12

    def test_constant_lives_in_approximation(self):
        spec = WaveletSpec(levels=2)
        coeffs = dwt2(np.ones((8, 8)), spec)
        rows, cols = approximation_shape(8, 8, spec)
        detail = coeffs.copy()
        detail[:rows, :cols] = 0
        assert np.abs(detail).max() <= 1e-12

    def test_not_divisible(self):
        with pytest.raises(DimensionNotDivisible):
            dwt2(np.ones((12, 12)), WaveletSpec(levels=3))

    @pytest.mark.parametrize("kwargs", [{"levels": 0}, {"name": "bior2.2"}, {"name": "nope"}])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParameter):
            WaveletSpec(**kwargs)
