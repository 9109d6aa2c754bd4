import csv

import pytest

from sbprecon.complexity import (
    COST_COLUMNS,
    cost_ratio_curve,
    flops_apply_A,
    flops_apply_precond,
    flops_build_precond,
    overhead_limit,
    write_cost_csv,
)
from sbprecon.exceptions import InvalidParameter, NonPowerOfTwo


def test_build_precond_pinned_values():
    assert flops_build_precond(1024, 12) == 191488
    assert flops_build_precond(2, 1) == 20


def test_apply_pinned_values():
    assert flops_apply_A(1024, 12) == 301056
    assert flops_apply_precond(1024) == 21504


@pytest.mark.parametrize("ncoils", [1, 4, 12, 32])
def test_coefficients(ncoils):
    size, log_n = 2**16, 16
    assert flops_build_precond(size, ncoils) == (3 + 2 * ncoils) * size + (4 + ncoils) * size * log_n
    assert flops_apply_A(size, ncoils) == (6 + 4 * ncoils) * size + 2 * ncoils * size * log_n
    assert flops_apply_precond(size) == size + 2 * size * log_n


def test_build_cost_is_superlinear():
    assert flops_build_precond(2048, 12) > 2 * flops_build_precond(1024, 12)


@pytest.mark.parametrize("size", [0, 3, 1000, 2.5])
def test_non_power_of_two(size):
    with pytest.raises(NonPowerOfTwo):
        flops_apply_precond(size)


def test_invalid_coils():
    with pytest.raises(InvalidParameter):
        flops_apply_A(1024, 0)


def test_ratio_gap_to_limit_shrinks():
    """1 - Nc (1 + 2L) / ((6 + 4Nc) + 2Nc L) = 42 / (54 + 24L) for Nc = 12."""
    points = cost_ratio_curve(12, [2**k for k in range(10, 31, 2)])
    gaps = [1 - point.ratio / overhead_limit(12) for point in points]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
    assert gaps[-1] == pytest.approx(42 / (54 + 24 * 30))
    assert gaps[-1] < 0.06


def test_ratio_reaches_limit_for_huge_problems():
    point = cost_ratio_curve(12, [2**400])[0]
    assert point.ratio == pytest.approx(1 / 12, rel=0.01)


def test_combined_is_sum_and_ordered():
    for point in cost_ratio_curve(12, [2**k for k in range(10, 31, 2)]):
        assert point.flops_combined == point.flops_M + point.flops_A
        assert point.flops_M < point.flops_A < point.flops_combined


def test_overhead_limit():
    assert overhead_limit(12) == 1 / 12


def test_write_cost_csv(tmp_path):
    points = cost_ratio_curve(12, [2**k for k in range(10, 31, 2)])
    write_cost_csv(points, tmp_path / "flops.csv")
    with open(tmp_path / "flops.csv") as handle:
        rows = list(csv.reader(handle))
    assert tuple(rows[0]) == COST_COLUMNS
    assert len(rows) == 1 + len(points)
    assert rows[1] == ["1024", "21504", "301056", "322560"]
