import math

import pytest

from wedge_spectra.observables import (
    lz_eigenstate_test,
    lz_stats_analytic,
    lz_stats_numeric,
    standing_wave_decomposition,
)
from wedge_spectra.wedge_model import ModeError, WedgeGeometry

GOLDEN = (1 + math.sqrt(5)) / 2
ANGLES = [math.pi / 2, 2 * math.pi / 3, math.pi, 3 * math.pi / 2, 2 * math.pi * 0.618]
GRID = [(phi, n) for phi in ANGLES for n in (1, 2, 3)]


def test_analytic_examples():
    s = lz_stats_analytic(WedgeGeometry.wedge(math.pi), 1)
    assert (s.mean, s.mean_square, s.uncertainty) == (0.0, 1.0, 1.0)
    s = lz_stats_analytic(WedgeGeometry.wedge(2 * math.pi / 3), 1)
    assert s.mean == 0.0
    assert s.mean_square == pytest.approx(2.25, rel=1e-15)
    assert s.uncertainty == pytest.approx(1.5, rel=1e-15)


def test_numeric_examples():
    hemi = WedgeGeometry.wedge(math.pi)
    assert abs(lz_stats_numeric(hemi, 1).mean) < 1e-10
    assert lz_stats_numeric(hemi, 2).mean_square == pytest.approx(4.0, rel=1e-8)
    golden = WedgeGeometry.wedge(2 * math.pi / GOLDEN)
    assert lz_stats_numeric(golden, 1).uncertainty == pytest.approx(0.809017, abs=1e-6)
    assert lz_stats_numeric(golden, 1).uncertainty == pytest.approx(GOLDEN / 2, rel=1e-8)


@pytest.mark.parametrize("phi,n", GRID)
def test_numeric_matches_analytic(phi, n):
    g = WedgeGeometry.wedge(phi)
    num, ana = lz_stats_numeric(g, n), lz_stats_analytic(g, n)
    assert abs(num.mean - ana.mean) <= 1e-10
    assert num.mean_square == pytest.approx(ana.mean_square, rel=1e-8)
    assert num.uncertainty == pytest.approx(n * math.pi / phi, rel=1e-8)
    assert abs(num.uncertainty**2 - (num.mean_square - num.mean**2)) <= 1e-12 * num.mean_square


@pytest.mark.parametrize("phi,n", GRID[::2])
def test_not_an_eigenstate(phi, n):
    overlap, image = lz_eigenstate_test(WedgeGeometry.wedge(phi), n)
    assert overlap < 1e-9
    assert image == pytest.approx(n * math.pi / phi, rel=1e-8)


@pytest.mark.parametrize("phi,n", GRID[:6])
def test_standing_wave_decomposition(phi, n):
    d = standing_wave_decomposition(WedgeGeometry.wedge(phi), n)
    assert (d.plus_weight, d.minus_weight) == (0.5, 0.5)
    assert d.mean == 0.0
    assert d.mean_square == pytest.approx((n * math.pi / phi) ** 2, rel=1e-15)


def test_periodic_mode_rejected():
    full = WedgeGeometry.full_sphere()
    for fn in (lz_stats_analytic, lz_stats_numeric, standing_wave_decomposition):
        with pytest.raises(ModeError):
            fn(full, 1)
