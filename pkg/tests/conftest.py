import numpy as np
import pytest

from helpers import make_ctx, random_sens, smooth_sens
from sbprecon.sampling import make_mask


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def small_ctx(rng):
    """Random 3-coil 8x8 context, cartesian R=2 mask, regularization set 1."""
    mask = make_mask("cartesian", 8, 8, 2, center_fraction=0.0, seed=3)
    return make_ctx(random_sens(rng, 3, 8, 8), mask)


@pytest.fixture
def smooth_ctx():
    """Simulated 4-coil 16x16 context with normalized sensitivities and a cartesian R=2 mask."""
    mask = make_mask("cartesian", 16, 16, 2, center_fraction=0.125, seed=5)
    return make_ctx(smooth_sens(4, 16, 16), mask)
