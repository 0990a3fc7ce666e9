"""Normalised eigenfunctions of the wedge and a shooting check of the polar ladder.

The polar factor with nu = mu + k is written as

    Theta(theta) = N (sin theta)^mu C_k^(mu + 1/2)(cos theta),

which is the regular Ferrers function P_nu^mu(cos theta) up to a constant.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .quadrature import gauss_legendre_grid, integrate
from .specfun import gegenbauer_c, ln_gamma, sph_bessel_j
from .wedge_model import QuantumNumbers, WedgeGeometry, mu_of, nu_of
from .zeros import bessel_j_zero

__all__ = [
    "PolarSolution",
    "EvalPoint",
    "ShootingError",
    "polar_solution",
    "gegenbauer_norm_sq",
    "azimuthal_eval",
    "azimuthal_derivative",
    "periodic_azimuthal_eval",
    "polar_eval",
    "polar_ode_residual",
    "polar_mismatch",
    "polar_shooting_eigenvalues",
    "radial_norm_const",
    "radial_eval",
    "radial_derivative",
    "psi_eval",
    "psi_norm_tensor",
]


class ShootingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PolarSolution:
    mu: float
    k_polar: int
    nu: float
    angular_eigenvalue: float
    norm_const: float


@dataclass(frozen=True)
class EvalPoint:
    r: float
    theta: float
    phi: float

    def check(self, geom: WedgeGeometry):
        if not (0.0 <= self.r <= geom.radius):
            raise ValueError(f"r={self.r!r} outside [0, {geom.radius}]")
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta={self.theta!r} outside [0, pi]")
        if not (0.0 <= self.phi <= geom.phi_extent):
            raise ValueError(f"phi={self.phi!r} outside [0, {geom.phi_extent}]")


# ---------------------------------------------------------------------------
# Azimuthal factor
# ---------------------------------------------------------------------------

def azimuthal_eval(geom: WedgeGeometry, n_phi: int, phi: float) -> float:
    """sqrt(2/Phi) sin(n_phi pi phi / Phi) on the wedge [0, Phi]."""
    if not (0.0 <= phi <= geom.phi_extent):
        raise ValueError(f"phi={phi!r} outside [0, {geom.phi_extent}]")
    mu = mu_of(geom, n_phi)
    return math.sqrt(2.0 / geom.phi_extent) * math.sin(mu * phi)


def azimuthal_derivative(geom: WedgeGeometry, n_phi: int, phi: float) -> float:
    mu = mu_of(geom, n_phi)
    return math.sqrt(2.0 / geom.phi_extent) * mu * math.cos(mu * phi)


def periodic_azimuthal_eval(m: int, phi: float) -> float:
    """Real azimuthal harmonic on the full circle: 1/sqrt(2pi), cos(m phi)/sqrt(pi), sin(|m| phi)/sqrt(pi)."""
    if m == 0:
        return 1.0 / math.sqrt(2.0 * math.pi)
    if m > 0:
        return math.cos(m * phi) / math.sqrt(math.pi)
    return math.sin(-m * phi) / math.sqrt(math.pi)


# ---------------------------------------------------------------------------
# Polar factor
# ---------------------------------------------------------------------------

def gegenbauer_norm_sq(mu: float, k: int) -> float:
    """Closed form of int_0^pi (sin t)^(2mu) C_k^(mu+1/2)(cos t)^2 sin t dt."""
    alpha = mu + 0.5
    log_val = (
        math.log(math.pi)
        + (1.0 - 2.0 * alpha) * math.log(2.0)
        + ln_gamma(k + 2.0 * alpha)
        - ln_gamma(k + 1.0)
        - math.log(k + alpha)
        - 2.0 * ln_gamma(alpha)
    )
    return math.exp(log_val)


def _polar_raw(mu, k, theta):
    s = math.sin(theta)
    return (s**mu if s > 0.0 else (1.0 if mu == 0.0 else 0.0)) * gegenbauer_c(k, mu + 0.5, math.cos(theta))


@functools.lru_cache(maxsize=1024)
def _polar_solution_cached(mu, k):
    closed = gegenbauer_norm_sq(mu, k)
    res = integrate(lambda t: _polar_raw(mu, k, t) ** 2 * math.sin(t), 0.0, math.pi, abs_tol=1e-13 * closed)
    if abs(res.value - closed) > 1e-8 * closed:
        raise ArithmeticError(
            f"polar norm quadrature {res.value!r} disagrees with closed form {closed!r} (mu={mu}, k={k})"
        )
    nu = nu_of(mu, k)
    return PolarSolution(mu, k, nu, nu * (nu + 1.0), 1.0 / math.sqrt(res.value))


def polar_solution(mu: float, k_polar: int) -> PolarSolution:
    """Regular polar solution with nu = mu + k_polar, normalised under sin(theta) d(theta)."""
    if mu < 0.0:
        raise ValueError(f"mu must be >= 0, got {mu!r}")
    if k_polar < 0:
        raise ValueError(f"k_polar must be >= 0, got {k_polar!r}")
    return _polar_solution_cached(float(mu), int(k_polar))


def polar_eval(sol: PolarSolution, theta: float) -> float:
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta={theta!r} outside [0, pi]")
    return sol.norm_const * _polar_raw(sol.mu, sol.k_polar, theta)


def polar_ode_residual(sol: PolarSolution, theta: float, h: float = 1e-4, lam: float | None = None) -> float:
    """Central-difference residual of the associated Legendre equation at theta.

    ``lam`` overrides the separation constant (default nu(nu+1)).
    """
    if not (2.0 * h < theta < math.pi - 2.0 * h):
        raise ValueError("theta must lie in (2h, pi - 2h)")
    if lam is None:
        lam = sol.angular_eigenvalue
    f_m = polar_eval(sol, theta - h)
    f_0 = polar_eval(sol, theta)
    f_p = polar_eval(sol, theta + h)
    d2 = (f_p - 2.0 * f_0 + f_m) / (h * h)
    d1 = (f_p - f_m) / (2.0 * h)
    s = math.sin(theta)
    return d2 + math.cos(theta) / s * d1 + (lam - sol.mu**2 / (s * s)) * f_0


# ---------------------------------------------------------------------------
# Shooting oracle for the regularity ladder
# ---------------------------------------------------------------------------

_THETA0 = 1e-6


def _frobenius_start(mu, lam, t0):
    # Theta = t^mu (1 + a t^2), regular at the pole
    a = (mu * (mu + 1.0) / 3.0 - lam) / (4.0 * (mu + 1.0))
    val = t0**mu * (1.0 + a * t0 * t0)
    der = mu * t0 ** (mu - 1.0) + a * (mu + 2.0) * t0 ** (mu + 1.0)
    return val, der


def _shoot(mu, lam, t_start, t_end, val, der):
    def rhs(t, y):
        s = math.sin(t)
        return [y[1], -math.cos(t) / s * y[1] - (lam - mu * mu / (s * s)) * y[0]]

    scale = abs(val) + abs(der)
    sol = solve_ivp(
        rhs,
        (t_start, t_end),
        [val / scale, der / scale],
        method="RK45",
        rtol=1e-11,
        atol=1e-16,
    )
    if not sol.success:
        raise ShootingError(sol.message)
    return sol.y[0, -1], sol.y[1, -1]


def polar_mismatch(mu: float, nu: float) -> float:
    """Normalised Wronskian at theta = pi/2 of the branches regular at each pole.

    Zero exactly when a single solution is regular at both poles.
    """
    lam = nu * (nu + 1.0)
    mid = 0.5 * math.pi
    v, d = _frobenius_start(mu, lam, _THETA0)
    l_val, l_der = _shoot(mu, lam, _THETA0, mid, v, d)
    # near theta = pi the regular branch is (pi - theta)^mu: derivative sign flips
    r_val, r_der = _shoot(mu, lam, math.pi - _THETA0, mid, v, -d)
    w = l_val * r_der - l_der * r_val
    return w / math.sqrt((l_val**2 + l_der**2) * (r_val**2 + r_der**2))


def polar_shooting_eigenvalues(mu: float, count: int, step: float = 0.25, tol: float = 1e-10) -> list[float]:
    """Lowest ``count`` values of nu admitting a polar solution regular at both poles.

    Scans nu upward from 0 for sign changes of :func:`polar_mismatch` and
    refines each bracket with Brent's method.
    """
    if not mu > 0.0:
        raise ValueError(f"mu must be positive, got {mu!r}")
    found = []
    lo = 0.0
    f_lo = polar_mismatch(mu, lo)
    limit = mu + count + 10.0
    while len(found) < count:
        if lo > limit:
            raise ShootingError(f"only {len(found)} eigenvalues found below nu={limit}")
        hi = lo + step
        f_hi = polar_mismatch(mu, hi)
        if f_hi == 0.0:
            found.append(hi)
        elif (f_lo > 0.0) != (f_hi > 0.0):
            root, info = brentq(lambda v: polar_mismatch(mu, v), lo, hi, xtol=tol, full_output=True)
            if not info.converged:
                raise ShootingError(f"refinement failed in [{lo}, {hi}]")
            found.append(root)
        lo, f_lo = hi, f_hi
    return found


# ---------------------------------------------------------------------------
# Radial factor
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def _radial_unit(nu_key, n_r):
    """(chi, 1/sqrt(int_0^1 j_nu(chi x)^2 x^2 dx)) for the unit ball."""
    chi = bessel_j_zero(nu_key, n_r).chi
    res = integrate(lambda x: sph_bessel_j(nu_key, chi * x) ** 2 * x * x, 0.0, 1.0, abs_tol=1e-14)
    return chi, 1.0 / math.sqrt(res.value)


def radial_norm_const(geom: WedgeGeometry, nu: float, n_r: int) -> tuple[float, float]:
    """Bessel zero and normalisation constant of the radial factor."""
    if n_r < 1:
        raise ValueError("n_r must be >= 1")
    chi, n_unit = _radial_unit(round(float(nu), 12), int(n_r))
    return chi, n_unit * geom.radius**-1.5


def radial_eval(geom: WedgeGeometry, nu: float, n_r: int, r: float) -> float:
    """Normalised N j_nu(chi r / R) with int_0^R value^2 r^2 dr = 1."""
    if not (0.0 <= r <= geom.radius):
        raise ValueError(f"r={r!r} outside [0, {geom.radius}]")
    chi, norm = radial_norm_const(geom, nu, n_r)
    x = chi * r / geom.radius
    # the wall is an exact zero by construction
    if r == geom.radius:
        return 0.0
    return norm * sph_bessel_j(nu, x)


def radial_derivative(geom: WedgeGeometry, nu: float, n_r: int, r: float) -> float:
    """d/dr of :func:`radial_eval` via j_nu' = (nu/x) j_nu - j_{nu+1}."""
    chi, norm = radial_norm_const(geom, nu, n_r)
    k = chi / geom.radius
    x = k * r
    if x == 0.0:
        if 0.0 < nu < 1.0:
            return math.inf
        return norm * k / 3.0 if nu == 1.0 else 0.0
    return norm * k * (nu / x * sph_bessel_j(nu, x) - sph_bessel_j(nu + 1.0, x))


# ---------------------------------------------------------------------------
# Full wavefunction
# ---------------------------------------------------------------------------

def psi_eval(geom: WedgeGeometry, qn: QuantumNumbers, point: EvalPoint) -> float:
    """psi(r, theta, phi) = R(r) Theta(theta) Phi(phi), each factor normalised."""
    point.check(geom)
    mu = qn.mu(geom)
    pol = polar_solution(mu, qn.k_polar)
    if geom.periodic:
        az = periodic_azimuthal_eval(qn.n_phi, point.phi)
    else:
        az = azimuthal_eval(geom, qn.n_phi, point.phi)
    return radial_eval(geom, pol.nu, qn.n_r, point.r) * polar_eval(pol, point.theta) * az


def psi_norm_tensor(geom: WedgeGeometry, qn: QuantumNumbers, n: int = 20) -> float:
    """int |psi|^2 r^2 sin(theta) dr dtheta dphi on an n^3 Gauss-Legendre grid."""
    rs, wr = gauss_legendre_grid(0.0, geom.radius, n)
    ts, wt = gauss_legendre_grid(0.0, math.pi, n)
    ps, wp = gauss_legendre_grid(0.0, geom.phi_extent, n)
    total = 0.0
    for r, a in zip(rs, wr):
        for t, b in zip(ts, wt):
            wrt = a * b * r * r * math.sin(t)
            for p, c in zip(ps, wp):
                v = psi_eval(geom, qn, EvalPoint(float(r), float(t), float(p)))
                total += wrt * c * v * v
    return total


def psi_grid(geom: WedgeGeometry, qn: QuantumNumbers, rs, thetas, phis) -> np.ndarray:
    """psi on the tensor grid rs x thetas x phis (shape len(rs), len(thetas), len(phis))."""
    out = np.empty((len(rs), len(thetas), len(phis)))
    for i, r in enumerate(rs):
        for j, t in enumerate(thetas):
            for l, p in enumerate(phis):
                out[i, j, l] = psi_eval(geom, qn, EvalPoint(float(r), float(t), float(p)))
    return out
