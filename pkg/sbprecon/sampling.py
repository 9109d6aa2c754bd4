"""Variable density undersampling masks, built in centred coordinates and rolled so DC sits at index 0."""

import logging
import math
import typing

import numpy as np

from .exceptions import Infeasible, InvalidParameter
from .models import MaskKind, SamplingMask


def _check(r: float, center_fraction: float):
    if not r >= 1:
        raise Infeasible(f"undersampling factor must be at least 1, got {r}")
    if not 0 <= center_fraction < 1:
        raise Infeasible(f"center fraction must lie in [0, 1), got {center_fraction}")


def _draw(rng: np.random.Generator, candidates: np.ndarray, weights: np.ndarray, count: int) -> np.ndarray:
    if count <= 0:
        return candidates[:0]
    return rng.choice(candidates, size=count, replace=False, p=weights / weights.sum())


def cartesian_vd_mask(
    m: int, n: int, r: float, center_fraction: float = 0.08, seed: int = 0, power: float = 3
) -> SamplingMask:
    """
    floor(m / r) fully sampled rows (foot-head undersampling).

    A block of ceil(center_fraction * m) rows around DC is always taken; the other rows are drawn
    without replacement with probability proportional to (1 + |d| / m) ** -power, d the distance
    from the centre row.
    """
    _check(r, center_fraction)
    budget = int(math.floor(m / r))
    center = int(math.ceil(center_fraction * m))
    if budget < 1 or center > budget:
        raise Infeasible(f"{center} centre rows do not fit a budget of {budget} rows out of {m}")

    rows = np.arange(m)
    start = m // 2 - center // 2
    is_center = (rows >= start) & (rows < start + center)
    candidates = rows[~is_center]
    weights = (1 + np.abs(candidates - m // 2) / m) ** (-power)

    rng = np.random.default_rng(seed)
    chosen = np.concatenate([rows[is_center], _draw(rng, candidates, weights, budget - center)])
    centred = np.zeros((m, n))
    centred[chosen, :] = 1
    cells = np.fft.ifftshift(centred, axes=0)
    logging.debug(
        "Cartesian mask", extra={"m": m, "n": n, "rows": budget, "center_rows": center, "seed": seed}
    )
    return SamplingMask(
        cells, target_r=r, kind=MaskKind.CARTESIAN_LINES, seed=seed, center_fraction=center_fraction
    )


def random_vd_mask(
    m: int, n: int, r: float, center_fraction: float = 0.08, seed: int = 0, power: float = 3
) -> SamplingMask:
    """
    floor(N / r) cells: a full disc of radius ceil(center_fraction * min(m, n) / 2) around DC
    plus draws whose probability decays with the radius.
    """
    _check(r, center_fraction)
    size = m * n
    budget = int(math.floor(size / r))
    radius = int(math.ceil(center_fraction * min(m, n) / 2))

    rows, cols = np.meshgrid(np.arange(m) - m // 2, np.arange(n) - n // 2, indexing="ij")
    rho = np.hypot(rows, cols).ravel()
    is_center = rho <= radius if radius > 0 else np.zeros(size, dtype=bool)
    center = int(is_center.sum())
    if budget < 1 or center > budget:
        raise Infeasible(f"{center} centre cells do not fit a budget of {budget} cells out of {size}")

    indices = np.arange(size)
    candidates = indices[~is_center]
    weights = (1 + rho[~is_center] / max(rho.max(), 1)) ** (-power)

    rng = np.random.default_rng(seed)
    chosen = np.concatenate([indices[is_center], _draw(rng, candidates, weights, budget - center)])
    centred = np.zeros(size)
    centred[chosen] = 1
    cells = np.fft.ifftshift(centred.reshape(m, n))
    logging.debug(
        "Random mask", extra={"m": m, "n": n, "cells": budget, "center_cells": center, "seed": seed}
    )
    return SamplingMask(cells, target_r=r, kind=MaskKind.RANDOM, seed=seed, center_fraction=center_fraction)


MASK_BUILDERS: typing.Dict[MaskKind, typing.Callable[..., SamplingMask]] = {
    MaskKind.CARTESIAN_LINES: cartesian_vd_mask,
    MaskKind.RANDOM: random_vd_mask,
}


def make_mask(
    kind: typing.Union[MaskKind, str],
    m: int,
    n: int,
    r: float,
    center_fraction: float = 0.08,
    seed: int = 0,
    power: float = 3,
) -> SamplingMask:
    try:
        kind = MaskKind(str(kind))
    except ValueError:
        raise InvalidParameter(f"unknown mask kind {kind!r}, expected one of {MaskKind.choices()}")
    return MASK_BUILDERS[kind](m, n, r, center_fraction=center_fraction, seed=seed, power=power)


def achieved_r(mask: SamplingMask) -> float:
    """N / sampled cells."""
    return mask.achieved_r
