"""L_z statistics of wedge eigenstates (hbar = 1 units throughout).

L_z = -i d/dphi. Applied to sqrt(2/Phi) sin(mu phi) it gives
-i mu sqrt(2/Phi) cos(mu phi), so every moment reduces to a real integral
once the factor of i is pulled out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import DEFAULT_ABS_TOL, integrate
from .wedge_model import ModeError, WedgeGeometry, mu_of

__all__ = [
    "AngularMomentumStats",
    "StandingWaveDecomposition",
    "lz_stats_analytic",
    "lz_stats_numeric",
    "lz_eigenstate_test",
    "standing_wave_decomposition",
]


@dataclass(frozen=True)
class AngularMomentumStats:
    mean: float
    mean_square: float
    uncertainty: float


@dataclass(frozen=True)
class StandingWaveDecomposition:
    plus_weight: float
    minus_weight: float
    eigenvalue_magnitude: float

    @property
    def mean(self) -> float:
        m = self.eigenvalue_magnitude
        return self.plus_weight * m - self.minus_weight * m

    @property
    def mean_square(self) -> float:
        return (self.plus_weight + self.minus_weight) * self.eigenvalue_magnitude**2


def _require_wedge(geom):
    if geom.periodic:
        raise ModeError("periodic states are L_z eigenstates; use m directly")


def lz_stats_analytic(geom: WedgeGeometry, n_phi: int) -> AngularMomentumStats:
    _require_wedge(geom)
    mu = mu_of(geom, n_phi)
    return AngularMomentumStats(mean=0.0, mean_square=mu * mu, uncertainty=mu)


def lz_stats_numeric(geom: WedgeGeometry, n_phi: int, abs_tol: float = DEFAULT_ABS_TOL) -> AngularMomentumStats:
    """Moments of L_z by quadrature over [0, Phi]."""
    _require_wedge(geom)
    mu = mu_of(geom, n_phi)
    span = geom.phi_extent
    amp2 = 2.0 / span
    # <L_z> = -i mu (2/Phi) int sin cos; reported without the i
    first = integrate(lambda p: math.sin(mu * p) * math.cos(mu * p), 0.0, span, abs_tol=abs_tol / (amp2 * mu))
    mean = -mu * amp2 * first.value
    # <L_z^2> = <psi | -d^2/dphi^2 psi> = mu^2 (2/Phi) int sin^2
    second = integrate(lambda p: math.sin(mu * p) ** 2, 0.0, span, abs_tol=1e-11 * span)
    mean_square = mu * mu * amp2 * second.value
    return AngularMomentumStats(mean, mean_square, math.sqrt(mean_square - mean * mean))


def lz_eigenstate_test(geom: WedgeGeometry, n_phi: int, abs_tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    """(|<Phi_n | L_z Phi_n>| / (|Phi_n| |L_z Phi_n|), |L_z Phi_n|).

    An eigenstate would give overlap 1; a wedge state gives overlap 0 with
    a non-zero image, i.e. L_z maps it onto something orthogonal to it.
    """
    _require_wedge(geom)
    mu = mu_of(geom, n_phi)
    span = geom.phi_extent
    amp2 = 2.0 / span
    cross = integrate(lambda p: math.sin(mu * p) * math.cos(mu * p), 0.0, span, abs_tol=abs_tol).value
    state_sq = integrate(lambda p: math.sin(mu * p) ** 2, 0.0, span, abs_tol=abs_tol).value
    image_sq = integrate(lambda p: math.cos(mu * p) ** 2, 0.0, span, abs_tol=abs_tol).value
    image_norm = mu * math.sqrt(amp2 * image_sq)
    overlap = abs(amp2 * mu * cross) / (math.sqrt(amp2 * state_sq) * image_norm)
    return overlap, image_norm


def standing_wave_decomposition(geom: WedgeGeometry, n_phi: int) -> StandingWaveDecomposition:
    """sin(mu phi) as an equal mix of the travelling waves exp(+-i mu phi).

    The weights are the measurement probabilities 1/2 each, not the raw
    amplitude moduli squared (1/4 each).
    """
    _require_wedge(geom)
    return StandingWaveDecomposition(0.5, 0.5, mu_of(geom, n_phi))
