"""Real-order special functions.

Cylindrical and spherical Bessel functions of real order, the gamma
family, Gegenbauer polynomials and the generalised double factorial.
Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PrecisionPolicy",
    "DEFAULT_POLICY",
    "ln_gamma",
    "cyl_bessel_j",
    "cyl_bessel_y",
    "sph_bessel_j",
    "sph_bessel_y",
    "gegenbauer_c",
    "gen_double_factorial",
]

_SQRT_PI = math.sqrt(math.pi)
_NEAR_INTEGER = 1e-6


@dataclass(frozen=True)
class PrecisionPolicy:
    target_rel_err: float = 1e-12
    max_series_terms: int = 500

    def __post_init__(self):
        if not (0.0 < self.target_rel_err <= 1e-6):
            raise ValueError("target_rel_err must lie in (0, 1e-6]")
        if self.max_series_terms < 50:
            raise ValueError("max_series_terms must be at least 50")


DEFAULT_POLICY = PrecisionPolicy()


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not x > 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# Cylindrical J
# ---------------------------------------------------------------------------

def _j_series(order, x, policy):
    # sum_k (-1)^k (x/2)^(2k+order) / (k! Gamma(k+order+1))
    half = 0.5 * x
    log_lead = order * math.log(half) - math.lgamma(order + 1.0)
    if log_lead < -745.0:
        return 0.0
    term = math.exp(log_lead)
    total = term
    q = -half * half
    for k in range(1, policy.max_series_terms):
        term *= q / (k * (k + order))
        total += term
        if abs(term) <= 0.25 * policy.target_rel_err * abs(total):
            return total
    raise ArithmeticError(f"J series did not converge (order={order}, x={x})")


def _j_hankel(order, x, policy):
    # Large-argument expansion; caller guarantees x >= max(25, order^2).
    mu = 4.0 * order * order
    p = 1.0
    q = 0.0
    a = 1.0
    prev = math.inf
    for k in range(1, policy.max_series_terms):
        a *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        mag = abs(a)
        if mag > prev:
            break
        if k % 2:
            q += a if (k // 2) % 2 == 0 else -a
        else:
            p += -a if (k // 2) % 2 else a
        if mag < 1e-17:
            break
        prev = mag
    omega = x - (0.5 * order + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(omega) - q * math.sin(omega))


def _j_miller(order, x):
    """Backward recurrence normalised with (x/2)^a = sum_k (a+2k) G(a+k)/k! J_{a+2k}."""
    n0 = int(math.floor(order))
    frac = order - n0
    top = max(n0, int(math.ceil(x))) + 30 + int(12.0 * x ** (1.0 / 3.0))
    if top % 2:
        top += 1
    f_next = 0.0
    f = 1e-30
    total = 0.0
    target = 0.0
    big = 1e250
    # ratio[m] = Gamma(frac+m)/m!, built upward from Gamma(frac+1)
    gamma_frac1 = math.exp(math.lgamma(frac + 1.0))
    ratio = [gamma_frac1] * (top // 2 + 1)
    for m in range(2, top // 2 + 1):
        ratio[m] = ratio[m - 1] * (frac + m - 1.0) / m
    for k in range(top, -1, -1):
        if k == n0:
            target = f
        if k % 2 == 0:
            c = gamma_frac1 if k == 0 else (frac + k) * ratio[k // 2]
            total += c * f
        if k == 0:
            break
        f_prev = 2.0 * (frac + k) / x * f - f_next
        f_next, f = f, f_prev
        if abs(f) > big:
            f *= 1.0 / big
            f_next *= 1.0 / big
            total *= 1.0 / big
            target *= 1.0 / big
    return target * math.exp(frac * math.log(0.5 * x)) / total


def cyl_bessel_j(order: float, x: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Bessel function of the first kind J_order(x), order >= 0, x >= 0."""
    if order < 0.0 or x < 0.0:
        raise ValueError(f"cyl_bessel_j needs order >= 0 and x >= 0, got ({order!r}, {x!r})")
    if x == 0.0:
        return 1.0 if order == 0.0 else 0.0
    if x <= 2.0 or x * x < order + 1.0:
        return _j_series(order, x, policy)
    if x >= max(25.0, order * order):
        return _j_hankel(order, x, policy)
    return _j_miller(order, x)


# ---------------------------------------------------------------------------
# Cylindrical Y (reflection formula; only needed for the divergence at 0)
# ---------------------------------------------------------------------------

def _y_nonint(order, x, policy):
    n0 = int(math.floor(order))
    f = order - n0
    g = 1.0 - f
    j_f = cyl_bessel_j(f, x, policy)
    j_f1 = cyl_bessel_j(f + 1.0, x, policy)
    j_g = cyl_bessel_j(g, x, policy)
    j_g1 = cyl_bessel_j(g + 1.0, x, policy)
    # J_{-f} and J_{-f-1} by downward recurrence from J_{1-f}, J_{2-f}
    j_mf = 2.0 * g / x * j_g - j_g1
    j_mf1 = -2.0 * f / x * j_mf - j_g
    y_lo = (j_f * math.cos(f * math.pi) - j_mf) / math.sin(f * math.pi)
    y_hi = (j_f1 * math.cos((f + 1.0) * math.pi) - j_mf1) / math.sin((f + 1.0) * math.pi)
    if n0 == 0:
        return y_lo
    for m in range(1, n0):
        y_lo, y_hi = y_hi, 2.0 * (f + m) / x * y_hi - y_lo
    return y_hi


def cyl_bessel_y(order: float, x: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Bessel function of the second kind Y_order(x), order >= 0, x > 0.

    Orders within 1e-6 of an integer are evaluated as the mean of the two
    neighbours order +- 1e-6, which costs roughly ten significant digits.
    """
    if order < 0.0:
        raise ValueError(f"cyl_bessel_y needs order >= 0, got {order!r}")
    if not x > 0.0:
        raise ValueError(f"cyl_bessel_y has a pole at x = 0 (got x={x!r})")
    if abs(order - round(order)) < _NEAR_INTEGER:
        base = float(round(order))
        hi = _y_nonint(base + _NEAR_INTEGER, x, policy)
        if base == 0.0:
            # Y_{-d} = Y_d cos(d pi) + J_d sin(d pi)
            d = _NEAR_INTEGER
            lo = hi * math.cos(d * math.pi) + cyl_bessel_j(d, x, policy) * math.sin(d * math.pi)
        else:
            lo = _y_nonint(base - _NEAR_INTEGER, x, policy)
        return 0.5 * (lo + hi)
    return _y_nonint(order, x, policy)


# ---------------------------------------------------------------------------
# Spherical Bessel functions of real order
# ---------------------------------------------------------------------------

def sph_bessel_j(nu: float, x: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Spherical Bessel j_nu(x) = sqrt(pi/2x) J_{nu+1/2}(x) for real nu >= 0."""
    if nu < 0.0 or x < 0.0:
        raise ValueError(f"sph_bessel_j needs nu >= 0 and x >= 0, got ({nu!r}, {x!r})")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    if x <= 2.0 or x * x < nu + 1.5:
        # direct series avoids the sqrt(pi/2x) prefactor cancelling x^(1/2)
        return _sph_j_series(nu, x, policy)
    return math.sqrt(0.5 * math.pi / x) * cyl_bessel_j(nu + 0.5, x, policy)


def _sph_j_series(nu, x, policy):
    # j_nu(x) = sqrt(pi)/2 * sum_k (-1)^k (x/2)^(2k+nu) / (k! Gamma(k+nu+3/2))
    half = 0.5 * x
    log_lead = nu * math.log(half) - math.lgamma(nu + 1.5)
    if log_lead < -745.0:
        return 0.0
    term = math.exp(log_lead)
    total = term
    q = -half * half
    for k in range(1, policy.max_series_terms):
        term *= q / (k * (k + nu + 0.5))
        total += term
        if abs(term) <= 0.25 * policy.target_rel_err * abs(total):
            return 0.5 * _SQRT_PI * total
    raise ArithmeticError(f"j series did not converge (nu={nu}, x={x})")


def sph_bessel_y(nu: float, x: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Spherical Bessel y_nu(x) = sqrt(pi/2x) Y_{nu+1/2}(x); diverges as x -> 0+."""
    if nu < 0.0:
        raise ValueError(f"sph_bessel_y needs nu >= 0, got {nu!r}")
    if not x > 0.0:
        raise ValueError(f"sph_bessel_y has a pole at x = 0 (got x={x!r})")
    return math.sqrt(0.5 * math.pi / x) * cyl_bessel_y(nu + 0.5, x, policy)


# ---------------------------------------------------------------------------
# Polynomials and factorials
# ---------------------------------------------------------------------------

def gegenbauer_c(k: int, alpha: float, x: float) -> float:
    """Gegenbauer polynomial C_k^(alpha)(x) by three-term recurrence."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return 1.0
    c_prev = 1.0
    c = 2.0 * alpha * x
    for n in range(2, k + 1):
        c_prev, c = c, (2.0 * x * (n + alpha - 1.0) * c - (n + 2.0 * alpha - 2.0) * c_prev) / n
    return c


def gen_double_factorial(nu: float) -> float:
    """(2 nu + 1)!! extended to real nu >= 0 as 2^(nu+1) Gamma(nu + 3/2) / sqrt(pi)."""
    if nu < 0.0:
        raise ValueError(f"gen_double_factorial needs nu >= 0, got {nu!r}")
    return math.exp((nu + 1.0) * math.log(2.0) + math.lgamma(nu + 1.5)) / _SQRT_PI
