import math

import pytest

from wedge_spectra.hydrogen import (
    RYDBERG_EV,
    degeneracy_scan,
    periodic_recovery,
    standard_energy,
    wedge_energy,
)

GOLDEN = (1 + math.sqrt(5)) / 2


def test_standard_energy():
    assert round(standard_energy(1), 1) == -13.6
    assert standard_energy(2) == pytest.approx(-3.40, abs=5e-3)
    assert standard_energy(2) == standard_energy(1) / 4
    assert -1e-6 < standard_energy(10000) < 0
    with pytest.raises(ValueError):
        standard_energy(0)


def test_third_sphere_ground():
    lv = wedge_energy(2 * math.pi / 3, 1, 0, 0)
    assert lv.nu == pytest.approx(1.5)
    assert lv.effective_principal == pytest.approx(2.5)
    assert lv.energy_eV == pytest.approx(-2.18, abs=0.01)
    assert lv.energy_eV == pytest.approx(-RYDBERG_EV / 6.25, rel=1e-12)


def test_hemisphere_ground():
    assert wedge_energy(math.pi, 1, 0, 0).energy_eV == pytest.approx(-13.605693 / 4, rel=1e-12)


def test_level_invariants():
    for phi in (0.4, 2.0, 5.9):
        for n_phi in (1, 2):
            for k in (0, 3):
                for n_r in (0, 2):
                    lv = wedge_energy(phi, n_phi, k, n_r)
                    assert lv.energy_eV < 0
                    assert lv.effective_principal > 1
                    assert lv.energy_eV == pytest.approx(-RYDBERG_EV / lv.effective_principal**2, rel=1e-12)


def test_monotone_in_each_number():
    phi = 1.7
    base = wedge_energy(phi, 1, 1, 1).energy_eV
    assert wedge_energy(phi, 2, 1, 1).energy_eV > base
    assert wedge_energy(phi, 1, 2, 1).energy_eV > base
    assert wedge_energy(phi, 1, 1, 2).energy_eV > base
    # narrower wedge pushes the level up towards zero
    assert wedge_energy(1.0, 1, 0, 0).energy_eV > wedge_energy(2.0, 1, 0, 0).energy_eV


def test_wedge_domain():
    for phi in (0.0, 2 * math.pi, 7.0):
        with pytest.raises(ValueError):
            wedge_energy(phi, 1, 0, 0)
    with pytest.raises(ValueError):
        wedge_energy(1.0, 1, 0, -1)


@pytest.mark.parametrize("m,k,n_r,n", [(0, 0, 0, 1), (1, 0, 0, 2), (-1, 0, 0, 2), (0, 2, 1, 4)])
def test_periodic_recovery(m, k, n_r, n):
    lv = periodic_recovery(m, k, n_r)
    assert lv.effective_principal == n
    assert lv.energy_eV == standard_energy(n)


def test_periodic_examples():
    assert round(periodic_recovery(0, 0, 0).energy_eV, 1) == -13.6
    assert periodic_recovery(0, 2, 1).energy_eV == pytest.approx(-0.850, abs=5e-4)


def test_limit_towards_full_turn():
    for eps in (1e-3, 1e-5):
        for k in range(3):
            for n_r in range(3):
                diff = wedge_energy(2 * math.pi - eps, 2, k, n_r).energy_eV - standard_energy(n_r + k + 2)
                # O(eps) approach
                assert abs(diff) < 2 * eps
    # n_phi = 1 tends to half-integer nu, absent from the integer spectrum
    lv = wedge_energy(2 * math.pi - 1e-9, 1, 1, 0)
    assert lv.effective_principal == pytest.approx(2.5, abs=1e-8)


def test_scan_third_sphere():
    report = degeneracy_scan(2 * math.pi / 3, (-3.0, -2.0))
    energies = [lv.energy_eV for lv in report.levels]
    assert any(abs(e + 2.18) < 0.01 for e in energies)
    assert all(-3.0 <= e <= -2.0 for e in energies)


def test_scan_hemisphere_coincidence():
    report = degeneracy_scan(math.pi, (-1.6, -1.4))
    assert report.has_coincidences
    group = report.groups[3.0]
    triples = {(lv.n_phi, lv.k_polar, lv.n_r) for lv in group}
    assert {(1, 1, 0), (2, 0, 0)} <= triples


@pytest.mark.parametrize("window", [(-13.7, -0.5), (-1.0, -0.2), (-0.3, -0.1)])
def test_scan_golden_no_coincidences(window):
    report = degeneracy_scan(2 * math.pi / GOLDEN, window)
    assert report.levels
    assert not report.has_coincidences


def test_scan_needs_bound_window():
    with pytest.raises(ValueError):
        degeneracy_scan(1.0, (-1.0, 0.0))


def test_within_tower_degeneracy_is_not_a_coincidence():
    report = degeneracy_scan(2 * math.pi / GOLDEN, (-1.0, -0.2))
    assert report.degenerate_groups
    for lvs in report.degenerate_groups.values():
        assert len({lv.n_phi for lv in lvs}) == 1
        assert len({lv.k_polar + lv.n_r for lv in lvs}) == 1
