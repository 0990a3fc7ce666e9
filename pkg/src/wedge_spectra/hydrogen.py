"""Hydrogen levels with a wedge-shaped angular domain.

Only energies: E = -Ry / (n_r + nu + 1)^2 with nu = n_phi pi / Phi + k.
Here n_r counts radial nodes from 0, unlike the box problem.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

__all__ = [
    "RYDBERG_EV",
    "HydrogenLevel",
    "DegeneracyReport",
    "standard_energy",
    "wedge_energy",
    "periodic_recovery",
    "degeneracy_scan",
]

RYDBERG_EV = 13.605693


@dataclass(frozen=True)
class HydrogenLevel:
    n_r: int
    n_phi: int  # holds m in periodic mode
    k_polar: int
    nu: float
    effective_principal: float
    energy_eV: float


def standard_energy(n: int) -> float:
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n!r}")
    return -RYDBERG_EV / (n * n)


def _check(n_r, k_polar):
    if n_r < 0:
        raise ValueError("n_r counts radial nodes and must be >= 0")
    if k_polar < 0:
        raise ValueError("k_polar must be >= 0")


def wedge_energy(phi_extent: float, n_phi: int, k_polar: int, n_r: int) -> HydrogenLevel:
    if not (0.0 < phi_extent < 2.0 * math.pi):
        raise ValueError(f"wedge angle must lie in (0, 2 pi), got {phi_extent!r}")
    if n_phi < 1:
        raise ValueError("n_phi must be >= 1")
    _check(n_r, k_polar)
    nu = n_phi * math.pi / phi_extent + k_polar
    n_eff = n_r + nu + 1.0
    return HydrogenLevel(n_r, n_phi, k_polar, nu, n_eff, -RYDBERG_EV / (n_eff * n_eff))


def periodic_recovery(m: int, k_polar: int, n_r: int) -> HydrogenLevel:
    """Full-sphere level: l = |m| + k, n = n_r + l + 1, identical to standard_energy(n)."""
    _check(n_r, k_polar)
    ell = abs(m) + k_polar
    n = n_r + ell + 1
    return HydrogenLevel(n_r, m, k_polar, float(ell), float(n), standard_energy(n))


@dataclass
class DegeneracyReport:
    phi_extent: float
    window: tuple[float, float]
    groups: dict = field(default_factory=dict)

    @property
    def levels(self):
        return [lv for key in sorted(self.groups) for lv in self.groups[key]]

    @property
    def degenerate_groups(self):
        return {key: lvs for key, lvs in self.groups.items() if len(lvs) > 1}

    @property
    def cross_tower_groups(self):
        """Groups mixing different n_phi.

        Within one tower (k, n_r) and (k + 1, n_r - 1) always share n_eff, so
        only groups spanning several n_phi count as coincidences.
        """
        return {key: lvs for key, lvs in self.groups.items() if len({lv.n_phi for lv in lvs}) > 1}

    @property
    def has_coincidences(self) -> bool:
        return bool(self.cross_tower_groups)


def degeneracy_scan(phi_extent: float, energy_window_eV: tuple[float, float]) -> DegeneracyReport:
    """All wedge levels with energy in the window, grouped by effective n (rounded to 1e-9)."""
    lo, hi = sorted(energy_window_eV)
    if not hi < 0.0:
        raise ValueError("the window must lie strictly below the ionisation limit")
    n_max = math.sqrt(RYDBERG_EV / -hi)
    mu1 = math.pi / phi_extent
    report = DegeneracyReport(phi_extent, (lo, hi))
    groups = defaultdict(list)
    n_phi = 1
    while n_phi * mu1 + 1.0 <= n_max:
        k = 0
        while n_phi * mu1 + k + 1.0 <= n_max:
            n_r = 0
            while True:
                lv = wedge_energy(phi_extent, n_phi, k, n_r)
                if lv.effective_principal > n_max:
                    break
                if lo <= lv.energy_eV <= hi:
                    groups[round(lv.effective_principal, 9)].append(lv)
                n_r += 1
            k += 1
        n_phi += 1
    report.groups = dict(sorted(groups.items()))
    return report
