"""Positive zeros of spherical Bessel functions of real order."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import sph_bessel_j

__all__ = ["BesselZero", "ZeroConvergenceError", "bessel_j_zero", "bessel_j_zeros", "mcmahon_estimate"]

_SCAN_STEP = math.pi / 8.0
_BISECT_WIDTH = 1e-12
_MAX_SCAN = 100000
_MAX_BISECT = 200


class ZeroConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class BesselZero:
    nu: float
    index: int
    chi: float


def mcmahon_estimate(nu: float, n: int) -> float:
    """McMahon's large-n expansion for the n-th zero of j_nu (= J_{nu+1/2})."""
    m = 4.0 * (nu + 0.5) ** 2
    beta = (n + 0.5 * nu) * math.pi
    b8 = 8.0 * beta
    return (
        beta
        - (m - 1.0) / b8
        - 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * b8**3)
    )


def _bisect(nu, lo, hi, f_lo):
    for _ in range(_MAX_BISECT):
        if hi - lo <= _BISECT_WIDTH:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        f_mid = sph_bessel_j(nu, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise ZeroConvergenceError(f"bisection stalled for nu={nu} in [{lo}, {hi}]")


def _next_zero(nu, start):
    """First zero of j_nu above ``start``, given no zero lies in (start - pi, start]."""
    x = start
    f_x = sph_bessel_j(nu, x)
    if f_x == 0.0:
        x += 1e-9
        f_x = sph_bessel_j(nu, x)
    for _ in range(_MAX_SCAN):
        y = x + _SCAN_STEP
        f_y = sph_bessel_j(nu, y)
        if f_y == 0.0:
            return y
        if (f_y > 0.0) != (f_x > 0.0):
            return _bisect(nu, x, y, f_x)
        x, f_x = y, f_y
    raise ZeroConvergenceError(f"no sign change found for nu={nu} above {start}")


def bessel_j_zeros(nu: float, count: int) -> list[BesselZero]:
    """The first ``count`` positive zeros of j_nu, in increasing order.

    Zeros of J_{nu+1/2} are simple and, since nu + 1/2 >= 1/2, consecutive
    zeros are at least pi apart while none lies below nu + 1/2. Scanning
    from there in steps of pi/8 therefore sees each zero as exactly one
    sign change, and after each zero the scan may jump ahead by pi.
    """
    if nu < 0.0:
        raise ValueError(f"order must be non-negative, got {nu!r}")
    if count < 1:
        raise ValueError("count must be at least 1")
    out = []
    start = nu + 0.5
    for n in range(1, count + 1):
        chi = _next_zero(nu, start)
        out.append(BesselZero(nu=nu, index=n, chi=chi))
        # spacing >= pi; the 0.01 margin absorbs the bisection width
        start = chi + math.pi - 0.01
    return out


def bessel_j_zero(nu: float, n: int) -> BesselZero:
    """The n-th positive zero of j_nu (n = 1 is the smallest zero above 0)."""
    if n < 1:
        raise ValueError(f"zero index starts at 1, got {n!r}")
    return bessel_j_zeros(nu, n)[-1]
