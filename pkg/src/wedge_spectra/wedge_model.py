"""Wedge geometry, quantum numbers and the box energy spectrum."""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass, field

from scipy.constants import hbar

from .zeros import bessel_j_zero

__all__ = [
    "BoundaryMode",
    "WedgeGeometry",
    "QuantumNumbers",
    "EnergyLevel",
    "CapTooSmallError",
    "ModeError",
    "DEFAULT_CAPS",
    "mu_of",
    "nu_of",
    "enumerate_levels",
    "ground_state",
    "energy_physical",
    "energy_scale",
]

DEFAULT_CAPS = (40, 40, 40)
_TWO_PI = 2.0 * math.pi


class BoundaryMode(str, enum.Enum):
    DIRICHLET_WEDGE = "dirichlet_wedge"
    PERIODIC_FULL_SPHERE = "periodic_full_sphere"


class ModeError(ValueError):
    """Operation not defined for the geometry's boundary mode."""


class CapTooSmallError(RuntimeError):
    """Enumeration caps too tight to certify the requested levels."""


@dataclass(frozen=True)
class WedgeGeometry:
    phi_extent: float
    radius: float = 1.0
    mass: float = 1.0
    boundary_mode: BoundaryMode = BoundaryMode.DIRICHLET_WEDGE

    def __post_init__(self):
        object.__setattr__(self, "boundary_mode", BoundaryMode(self.boundary_mode))
        if not (self.radius > 0.0 and self.mass > 0.0):
            raise ValueError("radius and mass must be positive")
        if self.boundary_mode is BoundaryMode.DIRICHLET_WEDGE:
            if not (0.0 < self.phi_extent < _TWO_PI):
                raise ValueError(f"a Dirichlet wedge needs 0 < phi_extent < 2 pi, got {self.phi_extent!r}")
        elif self.phi_extent != _TWO_PI:
            raise ValueError("periodic full-sphere mode requires phi_extent = 2 pi")

    @classmethod
    def wedge(cls, phi_extent, radius=1.0, mass=1.0):
        return cls(phi_extent, radius, mass, BoundaryMode.DIRICHLET_WEDGE)

    @classmethod
    def full_sphere(cls, radius=1.0, mass=1.0):
        return cls(_TWO_PI, radius, mass, BoundaryMode.PERIODIC_FULL_SPHERE)

    @property
    def periodic(self) -> bool:
        return self.boundary_mode is BoundaryMode.PERIODIC_FULL_SPHERE


@dataclass(frozen=True)
class QuantumNumbers:
    """Box quantum numbers.

    In periodic mode ``n_phi`` holds the integer m (any sign); otherwise it
    is the azimuthal index n_phi >= 1. ``n_r`` counts zeros from 1.
    """

    n_phi: int
    k_polar: int
    n_r: int

    def __post_init__(self):
        if self.k_polar < 0:
            raise ValueError("k_polar must be >= 0")
        if self.n_r < 1:
            raise ValueError("n_r must be >= 1")

    def mu(self, geom: WedgeGeometry) -> float:
        if geom.periodic:
            return float(abs(self.n_phi))
        return mu_of(geom, self.n_phi)

    def nu(self, geom: WedgeGeometry) -> float:
        return nu_of(self.mu(geom), self.k_polar)


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    mu: float
    nu: float
    chi: float
    energy_dimensionless: float
    energy_joules: float
    degeneracy: int = field(default=1)


def mu_of(geom: WedgeGeometry, n_phi: int) -> float:
    """Effective azimuthal number n_phi * pi / Phi."""
    if geom.periodic:
        raise ModeError("periodic mode uses the integer m directly")
    if n_phi < 1:
        raise ValueError(f"n_phi must be >= 1, got {n_phi!r}")
    return n_phi * math.pi / geom.phi_extent


def nu_of(mu: float, k_polar: int) -> float:
    return mu + k_polar


def energy_scale(geom: WedgeGeometry) -> float:
    """hbar^2 / (2 M R^2) in joules."""
    return hbar * hbar / (2.0 * geom.mass * geom.radius * geom.radius)


def energy_physical(geom: WedgeGeometry, level_or_chi) -> float:
    """Physical energy hbar^2 chi^2 / (2 M R^2) for a level (or a bare zero)."""
    chi = level_or_chi.chi if isinstance(level_or_chi, EnergyLevel) else float(level_or_chi)
    return energy_scale(geom) * (chi * chi)


class _ZeroTable:
    # nu is rounded so equal-nu towers reached by different routes share chi exactly
    def __init__(self):
        self._cache = {}

    def chi(self, nu, n_r):
        key = (round(nu, 12), n_r)
        if key not in self._cache:
            self._cache[key] = bessel_j_zero(key[0], n_r).chi
        return self._cache[key]


def _make_level(geom, qn, zeros, degeneracy=1):
    mu = qn.mu(geom)
    nu = nu_of(mu, qn.k_polar)
    chi = zeros.chi(nu, qn.n_r)
    e = chi * chi
    return EnergyLevel(qn, mu, nu, chi, e, energy_scale(geom) * e, degeneracy)


def enumerate_levels(geom: WedgeGeometry, max_levels: int, caps=DEFAULT_CAPS) -> list[EnergyLevel]:
    """The ``max_levels`` lowest box levels, sorted by energy.

    Energy rises strictly with each of n_phi, k_polar and n_r, so a
    best-first walk from the ground state yields levels in order. Ties go
    to the lexicographically smaller (n_phi, k_polar, n_r). In periodic
    mode each (l, n_r) appears once, represented by m = 0, k_polar = l,
    with degeneracy 2l + 1.

    Raises CapTooSmallError unless the last returned level lies strictly
    below the lowest level excluded by the caps.
    """
    if max_levels < 1:
        raise ValueError("max_levels must be >= 1")
    cap_phi, cap_k, cap_r = caps
    zeros = _ZeroTable()
    periodic = geom.periodic

    def level(n_phi, k, n_r):
        deg = 2 * k + 1 if periodic else 1
        return _make_level(geom, QuantumNumbers(n_phi, k, n_r), zeros, deg)

    first_phi = 0 if periodic else 1
    start = (first_phi, 0, 1)
    heap = []
    seen = {start}

    def push(idx):
        lv = level(*idx)
        heapq.heappush(heap, (lv.energy_dimensionless, idx, lv))

    push(start)
    out = []
    while heap and len(out) < max_levels:
        _, (n_phi, k, n_r), lv = heapq.heappop(heap)
        out.append(lv)
        neighbours = [(n_phi, k + 1, n_r), (n_phi, k, n_r + 1)]
        if not periodic:
            neighbours.append((n_phi + 1, k, n_r))
        for nb in neighbours:
            if nb in seen or nb[0] > cap_phi or nb[1] > cap_k or nb[2] > cap_r:
                continue
            seen.add(nb)
            push(nb)

    # lowest level excluded by each cap
    boundary = [level(first_phi, cap_k + 1, 1), level(first_phi, 0, cap_r + 1)]
    if not periodic:
        boundary.append(level(cap_phi + 1, 0, 1))
    floor = min(b.energy_dimensionless for b in boundary)
    if len(out) < max_levels or out[-1].energy_dimensionless >= floor:
        raise CapTooSmallError(
            f"caps {tuple(caps)} cannot certify {max_levels} levels "
            f"(excluded levels start at E = {floor:.6g})"
        )
    return out


def ground_state(geom: WedgeGeometry) -> EnergyLevel:
    return enumerate_levels(geom, 1)[0]
