import numpy as np
import pytest

from helpers import make_ctx, random_image, random_sens
from sbprecon.exceptions import SettingDoesNotExist, SingularDiagonal, SingularPreconditioner
from sbprecon.models import PreconditionerType, SamplingMask
from sbprecon.oracle import dense_A, dense_K_diag
from sbprecon.precondfactories import PreconditionerFactory
from sbprecon.preconditioners import (
    CirculantPreconditioner,
    IdentityPreconditioner,
    JacobiPreconditioner,
    apply_circulant,
    apply_jacobi,
    build_circulant,
    build_jacobi,
    jacobi_diagonal,
    k_c_diag,
)
from sbprecon.readers import DefaultReader
from sbprecon.sampling import make_mask
from sbprecon.transforms import fft2, ifft2


@pytest.mark.parametrize("size", [4, 8, 16])
@pytest.mark.parametrize("ncoils", [1, 2, 4])
@pytest.mark.parametrize("kind", ["cartesian", "random"])
@pytest.mark.parametrize("accel", [2, 4])
def test_circulant_diagonal_matches_dense_K(size, ncoils, kind, accel):
    rng = np.random.default_rng(size * 100 + ncoils * 10 + accel)
    mask = make_mask(kind, size, size, accel, center_fraction=0.0, seed=ncoils)
    ctx = make_ctx(random_sens(rng, ncoils, size, size), mask)
    k = build_circulant(ctx).k
    assert np.abs(k - dense_K_diag(ctx)).max() <= 1e-10 * np.abs(k).max()


def test_kc_single_ones_coil_is_the_mask():
    mask = make_mask("cartesian", 8, 8, 4, center_fraction=0.0, seed=1)
    assert np.allclose(k_c_diag(np.ones((8, 8)), mask), mask.cells)


def test_kc_full_mask_unit_coil_energy(rng):
    sens = random_sens(rng, 3, 8, 8)
    sens = sens / np.sqrt(np.sum(np.abs(sens) ** 2, axis=0))
    assert np.allclose(k_c_diag(sens, SamplingMask.full(8, 8)), 1)


def test_kc_is_real_nonnegative(rng):
    mask = make_mask("random", 8, 8, 2, center_fraction=0.0, seed=2)
    kc = k_c_diag(random_sens(rng, 2, 8, 8), mask)
    assert np.all(kc.imag == 0)
    assert kc.real.min() >= -1e-12


def test_dense_K_diag_trivial_cases(rng):
    ctx = make_ctx(np.ones((8, 8)), SamplingMask.full(8, 8), mu=1.0, lam=0.0, gamma=0.0)
    assert np.allclose(dense_K_diag(ctx), 1, atol=1e-12)
    ctx = make_ctx(random_sens(rng, 2, 8, 8), SamplingMask.full(8, 8), mu=0.0, lam=0.0, gamma=1.0)
    assert np.allclose(dense_K_diag(ctx), 1, atol=1e-12)


def test_circulant_apply_is_fourier_division(small_ctx, rng):
    precond = build_circulant(small_ctx)
    r = random_image(rng, 8, 8)
    assert np.allclose(apply_circulant(r, precond), ifft2(fft2(r) / precond.k))
    assert precond.get_preconditioner_type() == PreconditionerType.CIRCULANT
    assert precond.build_seconds >= 0


def test_circulant_inverse_round_trip(small_ctx, rng):
    precond = build_circulant(small_ctx)
    r = random_image(rng, 8, 8)
    assert np.allclose(ifft2(precond.k * fft2(precond.apply(r))), r)


def test_circulant_singular():
    # Without TV and wavelet terms k = mu r for a single all-ones coil, zero on every skipped row.
    mask = make_mask("cartesian", 8, 8, 2, center_fraction=0.0, seed=1)
    ctx = make_ctx(np.ones((8, 8)), mask, mu=1.0, lam=0.0, gamma=0.0)
    with pytest.raises(SingularPreconditioner):
        build_circulant(ctx)


def test_jacobi_diagonal_matches_dense(small_ctx):
    assert np.allclose(jacobi_diagonal(small_ctx), np.diag(dense_A(small_ctx)).reshape(8, 8), atol=1e-12)


def test_jacobi_apply(small_ctx, rng):
    precond = build_jacobi(small_ctx)
    r = random_image(rng, 8, 8)
    assert np.allclose(apply_jacobi(r, precond), r / jacobi_diagonal(small_ctx))


def test_jacobi_singular(rng):
    ctx = make_ctx(np.zeros((1, 8, 8)), SamplingMask.full(8, 8), mu=1.0, lam=0.0, gamma=0.0)
    with pytest.raises(SingularDiagonal):
        build_jacobi(ctx)


def test_identity_copies(small_ctx, rng):
    precond = IdentityPreconditioner(small_ctx).ready()
    r = random_image(rng, 8, 8)
    out = precond.apply(r)
    assert np.array_equal(out, r) and out is not r
    assert precond.as_operator() is None


def test_settings_are_required(small_ctx):
    with pytest.raises(SettingDoesNotExist):
        CirculantPreconditioner(small_ctx)


class TestFactory:
    @pytest.mark.parametrize(
        "kind, klass",
        [
            ("none", IdentityPreconditioner),
            ("jacobi", JacobiPreconditioner),
            (PreconditionerType.CIRCULANT, CirculantPreconditioner),
        ],
    )
    def test_create(self, small_ctx, kind, klass):
        precond = PreconditionerFactory().create(small_ctx, kind)
        assert isinstance(precond, klass)
        assert precond.ctx is small_ctx

    def test_default_kind(self, small_ctx):
        assert isinstance(PreconditionerFactory().create(small_ctx), CirculantPreconditioner)

    def test_unknown_kind(self, small_ctx):
        with pytest.raises(SettingDoesNotExist):
            PreconditionerFactory().create(small_ctx, "ilu")

    def test_reader_settings_are_passed(self, small_ctx):
        class StrictReader(DefaultReader):
            def read(self, kind):
                return {"SINGULAR_TOLERANCE": 1e9}

        with pytest.raises(SingularPreconditioner):
            PreconditionerFactory(StrictReader()).create(small_ctx, "circulant")
