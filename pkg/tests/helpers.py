import dataclasses

import numpy as np

from sbprecon.calib import CoilSimSpec, normalize_sensitivities, simulate_coils
from sbprecon.encoding import EncodingContext
from sbprecon.models import ReconParams


def levels_for(m, n, wanted=4):
    """Deepest wavelet level (at most ``wanted``) that divides both sides."""
    levels = 1
    while levels < wanted and m % 2 ** (levels + 1) == 0 and n % 2 ** (levels + 1) == 0:
        levels += 1
    return levels


def random_image(rng, m, n):
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def random_sens(rng, ncoils, m, n):
    return rng.standard_normal((ncoils, m, n)) + 1j * rng.standard_normal((ncoils, m, n))


def smooth_sens(ncoils, m, n, seed=0):
    raw = simulate_coils(CoilSimSpec(ncoils=ncoils, seed=seed), m, n)
    return normalize_sensitivities(raw, np.ones((m, n), dtype=bool))


def make_ctx(sens, mask, params=None, **overrides):
    m, n = mask.shape
    if params is None:
        params = ReconParams.from_set(1, wavelet_levels=levels_for(m, n))
    if overrides:
        params = dataclasses.replace(params, **overrides)
    return EncodingContext(sens=sens, mask=mask, params=params)
