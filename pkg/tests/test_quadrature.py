import math

import numpy as np
import pytest

from wedge_spectra.quadrature import QuadratureError, gauss_legendre_grid, integrate


def test_examples():
    assert integrate(math.sin, 0.0, math.pi).value == pytest.approx(2.0, abs=1e-10)
    assert integrate(lambda t: math.sin(t) ** 3, 0.0, math.pi).value == pytest.approx(4.0 / 3.0, abs=1e-10)


@pytest.mark.parametrize("phi", [math.pi / 2, 2 * math.pi / 3, 4.0])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_sine_square_half_period(phi, n):
    res = integrate(lambda p: math.sin(n * math.pi * p / phi) ** 2, 0.0, phi)
    assert res.value == pytest.approx(phi / 2, abs=1e-10)
    assert res.est_abs_err <= 1e-10


@pytest.mark.parametrize("degree", [0, 1, 7, 18, 29])
def test_polynomial_exactness(degree):
    rng = np.random.default_rng(degree)
    coeffs = rng.normal(size=degree + 1)
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(1.0) - poly.integ()(-0.6)
    assert integrate(lambda x: float(poly(x)), -0.6, 1.0).value == pytest.approx(exact, abs=1e-13)


def test_additivity():
    f = lambda x: math.exp(-x) * math.cos(3 * x)  # noqa: E731
    tol = 1e-10
    ab = integrate(f, 0.0, 1.1, tol).value
    bc = integrate(f, 1.1, 2.5, tol).value
    ac = integrate(f, 0.0, 2.5, tol).value
    assert abs(ab + bc - ac) <= 3 * tol


@pytest.mark.parametrize("mu", [0.05, 0.55, 1.2])
def test_soft_endpoint_singularity(mu):
    # theta^(2 mu + 1) type behaviour; exact value sqrt(pi) Gamma(mu+1) / Gamma(mu+3/2)
    exact = math.sqrt(math.pi) * math.gamma(mu + 1) / math.gamma(mu + 1.5)
    res = integrate(lambda t: math.sin(t) ** (2 * mu + 1), 0.0, math.pi, 1e-11)
    assert res.value == pytest.approx(exact, abs=1e-10)


def test_budget_exhausted():
    with pytest.raises(QuadratureError):
        integrate(lambda x: math.sin(1.0 / x) / x, 1e-6, 1.0, 1e-12, max_panels=50)


def test_bad_interval():
    with pytest.raises(ValueError):
        integrate(math.sin, 1.0, 1.0)


def test_grid_rule():
    x, w = gauss_legendre_grid(0.0, 2.0, 10, panels=3)
    assert w.sum() == pytest.approx(2.0, abs=1e-14)
    assert np.dot(w, x**5) == pytest.approx(2.0**6 / 6, rel=1e-13)
