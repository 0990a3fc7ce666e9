"""Self-check suite run by ``wedge-spectra verify``.

Each check measures an error and compares it with a fixed tolerance.
Known disagreements with published numbers are reported as logged
entries rather than failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import mpmath

from . import eigenstates as es
from .hydrogen import RYDBERG_EV, periodic_recovery, standard_energy, wedge_energy
from .observables import lz_stats_analytic, lz_stats_numeric
from .quadrature import integrate
from .specfun import gegenbauer_c, gen_double_factorial, ln_gamma, sph_bessel_j
from .wedge_model import QuantumNumbers, WedgeGeometry, energy_scale, ground_state
from .zeros import bessel_j_zero, bessel_j_zeros

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class Table1Entry:
    name: str
    geometry: Callable[[], WedgeGeometry]
    mu1: str
    published: float


TABLE1 = (
    Table1Entry("full_sphere", WedgeGeometry.full_sphere, "0", 9.87),
    Table1Entry("hemisphere", lambda: WedgeGeometry.wedge(math.pi), "1", 20.19),
    Table1Entry("third_sphere", lambda: WedgeGeometry.wedge(2.0 * math.pi / 3.0), "3/2", 27.42),
    Table1Entry("quarter_sphere", lambda: WedgeGeometry.wedge(math.pi / 2.0), "2", 33.21),
)
# published values are quoted to two decimals
TABLE1_TOL = 0.01


def table1_rows():
    rows = []
    for entry in TABLE1:
        gs = ground_state(entry.geometry())
        diff = gs.energy_dimensionless - entry.published
        rows.append(
            {
                "geometry": entry.name,
                "phi_extent": entry.geometry().phi_extent,
                "mu1": entry.mu1,
                "nu_ground": gs.nu,
                "chi": gs.chi,
                "computed": gs.energy_dimensionless,
                "published": entry.published,
                "difference": diff,
                "agrees": abs(diff) <= TABLE1_TOL,
            }
        )
    return rows


def table1_discrepancies(rows=None):
    rows = table1_rows() if rows is None else rows
    return [
        f"table1.{r['geometry']}: oracle {r['computed']:.3f} vs paper {r['published']:.2f} (logged)"
        for r in rows
        if not r["agrees"]
    ]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    note: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        text = f"[{tag}] {self.name}: error={self.measured:.3e} tol={self.tolerance:.1e}"
        return text + (f" ({self.note})" if self.note else "")


def _check(name, measured, tol, note=""):
    return CheckResult(name, bool(measured <= tol), float(measured), tol, note)


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------------------


def _half_integer_closed_forms(x):
    s, c = mpmath.sin(x), mpmath.cos(x)
    return (
        s / x,
        s / x**2 - c / x,
        (3 / x**2 - 1) * s / x - 3 * c / x**2,
        (15 / x**3 - 6 / x) * s / x - (15 / x**2 - 1) * c / x,
    )


def _specfun_checks():
    xs = [0.1 + 0.5 * i for i in range(100)]
    err = 0.0
    with mpmath.workdps(40):
        for x in xs:
            for nu, ref in enumerate(_half_integer_closed_forms(mpmath.mpf(x))):
                ref = float(ref)
                err = max(err, abs(sph_bessel_j(nu, x) - ref) / abs(ref))
    yield _check("specfun.half_integer_reduction", err, 1e-10)

    err = 0.0
    for nu in [1.0, 1.5, 2.3, 4.75, 7.0, 10.0]:
        for x in [0.5, 1.3, 4.0, 9.7, 20.0, 39.0]:
            lhs = sph_bessel_j(nu - 1.0, x) + sph_bessel_j(nu + 1.0, x)
            rhs = (2.0 * nu + 1.0) / x * sph_bessel_j(nu, x)
            err = max(err, abs(lhs - rhs) / max(abs(rhs), abs(lhs), 1e-12))
    yield _check("specfun.recurrence", err, 1e-8)

    err = max(
        abs(sph_bessel_j(nu, 1e-4) * gen_double_factorial(nu) / 1e-4**nu - 1.0)
        for nu in [0.5, 1.0, 1.5, math.pi / 2.0, 2.0]
    )
    yield _check("specfun.small_argument_law", err, 1e-6)

    err = 0.0
    for a in [0.6, 1.5, 2.5]:
        for x in [-1.0, -0.3, 0.0, 0.45, 1.0]:
            err = max(err, abs(gegenbauer_c(2, a, x) - (2.0 * a * (a + 1.0) * x * x - a)))
            err = max(err, abs(gegenbauer_c(1, a, x) - 2.0 * a * x))
    yield _check("specfun.gegenbauer_closed_forms", err, 1e-14)

    err = max(abs(ln_gamma(x + 1.0) - ln_gamma(x) - math.log(x)) for x in [0.5 + 0.99 * i for i in range(101)])
    yield _check("specfun.ln_gamma_functional_equation", err, 1e-12)


def _zeros_checks():
    grid = [0.0, 0.5, GOLDEN / 2.0, 1.0, 1.5, 2.0, 3.0]
    table = {nu: [z.chi for z in bessel_j_zeros(nu, 3)] for nu in grid}
    residual = max(abs(sph_bessel_j(nu, c)) for nu in grid for c in table[nu])
    yield _check("zeros.residual", residual, 1e-10)
    bad = sum(
        1 for a, b in zip(grid, grid[1:]) for n in range(3) if not table[a][n] < table[b][n]
    ) + sum(1 for nu in grid for n in range(2) if not table[nu][n + 1] - table[nu][n] > 1.0)
    yield _check("zeros.interlacing_and_ordering", bad, 0, "violations counted")
    err = max(_rel(bessel_j_zero(nu, 50).chi, (50 + nu / 2.0) * math.pi) for nu in [0.0, 1.0, 2.0, 3.0])
    yield _check("zeros.mcmahon_n50", err, 0.02)
    chi11 = bessel_j_zero(1.0, 1).chi
    yield _check("zeros.chi_1_1_vs_4.493", abs(chi11 - 4.493), 1e-3)
    yield _check("zeros.chi_1_1_vs_oracle", abs(chi11 - 4.4934094579090642), 1e-10)


def _table1_checks():
    rows = table1_rows()
    oracle = {"third_sphere": 26.374616427163}
    for r in rows:
        if r["agrees"]:
            yield _check(f"table1.{r['geometry']}", abs(r["difference"]), TABLE1_TOL, f"computed {r['computed']:.4f}")
        else:
            note = f"oracle {r['computed']:.3f} vs paper {r['published']:.2f} (logged)"
            err = abs(r["computed"] - oracle.get(r["geometry"], math.inf))
            yield CheckResult(f"table1.{r['geometry']}", err <= 1e-3, err, 1e-3, note)
    energies = [r["computed"] for r in rows]
    yield _check("wedge.monotone_in_angle", sum(1 for a, b in zip(energies, energies[1:]) if not a < b), 0)
    geom = WedgeGeometry.wedge(math.pi, radius=1e-9, mass=9.1093837015e-31)
    gs = ground_state(geom)
    yield _check("wedge.dimensional_consistency", _rel(gs.energy_dimensionless * energy_scale(geom), gs.energy_joules), 1e-12)


_STATES = [
    (math.pi, QuantumNumbers(1, 0, 1)),
    (math.pi, QuantumNumbers(2, 1, 2)),
    (2.0 * math.pi / 3.0, QuantumNumbers(1, 0, 1)),
    (math.pi / 2.0, QuantumNumbers(1, 2, 1)),
    (2.0 * math.pi / GOLDEN, QuantumNumbers(1, 1, 1)),
    (3.0 * math.pi / 2.0, QuantumNumbers(3, 0, 2)),
]


def _eigenstate_checks():
    az = pol = rad = full = 0.0
    for phi, qn in _STATES:
        g = WedgeGeometry.wedge(phi)
        az = max(az, abs(integrate(lambda p: es.azimuthal_eval(g, qn.n_phi, p) ** 2, 0.0, phi).value - 1.0))
        sol = es.polar_solution(qn.mu(g), qn.k_polar)
        pol = max(pol, abs(integrate(lambda t: es.polar_eval(sol, t) ** 2 * math.sin(t), 0.0, math.pi).value - 1.0))
        rad = max(
            rad,
            abs(integrate(lambda r: es.radial_eval(g, sol.nu, qn.n_r, r) ** 2 * r * r, 0.0, 1.0, 1e-9).value - 1.0),
        )
    for phi, qn in _STATES[:2]:
        full = max(full, abs(es.psi_norm_tensor(WedgeGeometry.wedge(phi), qn) - 1.0))
    yield _check("eigenstates.norm.azimuthal", az, 1e-8)
    yield _check("eigenstates.norm.polar", pol, 1e-8)
    yield _check("eigenstates.norm.radial", rad, 1e-7)
    yield _check("eigenstates.norm.full_3d", full, 1e-6)

    thetas = [0.1 + i * (math.pi - 0.2) / 19.0 for i in range(20)]
    res = max(
        abs(es.polar_ode_residual(es.polar_solution(mu, 0), t)) for mu in [0.55, 1.0, 1.5, 2.0] for t in thetas
    )
    yield _check("eigenstates.sectoral_ode_residual", res, 1e-5)

    for mu in [1.0, 1.5, 0.809017]:
        ladder = es.polar_shooting_eigenvalues(mu, 3)
        err = max(abs(v - (mu + i)) for i, v in enumerate(ladder))
        yield _check(f"eigenstates.shooting_ladder.mu={mu:g}", err, 1e-6)
        accepted = max(abs(es.polar_mismatch(mu, v)) for v in ladder)
        rejected = abs(es.polar_mismatch(mu, mu + 0.5))
        ratio = rejected / max(accepted, 1e-300)
        yield CheckResult(
            f"eigenstates.shooting_rejects_half_step.mu={mu:g}", ratio >= 1e3, ratio, 1e3, "ratio must reach tol"
        )

    g = WedgeGeometry.wedge(math.pi)
    err = 0.0
    for nu in [0.55, 1.0, 2.0]:
        a, b = 1e-4, 1e-3
        slope = math.log(es.radial_eval(g, nu, 1, b) ** 2 / es.radial_eval(g, nu, 1, a) ** 2) / math.log(b / a)
        err = max(err, abs(slope - 2.0 * nu) / (2.0 * nu))
    yield _check("eigenstates.near_origin_slope", err, 0.01)


def _observable_checks():
    mean_err = ms_err = 0.0
    for phi in [math.pi / 2.0, 2.0 * math.pi / 3.0, math.pi, 3.0 * math.pi / 2.0, 2.0 * math.pi * 0.618]:
        g = WedgeGeometry.wedge(phi)
        for n in (1, 2, 3):
            num = lz_stats_numeric(g, n)
            ana = lz_stats_analytic(g, n)
            mean_err = max(mean_err, abs(num.mean))
            ms_err = max(ms_err, _rel(num.mean_square, ana.mean_square), _rel(num.uncertainty, n * math.pi / phi))
    yield _check("observables.mean_zero", mean_err, 1e-10)
    yield _check("observables.uncertainty", ms_err, 1e-8)


def _hydrogen_checks():
    g = wedge_energy(2.0 * math.pi / 3.0, 1, 0, 0)
    yield _check("hydrogen.third_sphere_ground_vs_-2.18", abs(g.energy_eV + 2.18), 0.01)
    err = 0.0
    for n in range(1, 6):
        for ell in range(n):
            for m in range(-ell, ell + 1):
                lv = periodic_recovery(m, ell - abs(m), n - ell - 1)
                err = max(err, _rel(lv.energy_eV, -RYDBERG_EV / n**2))
    yield _check("hydrogen.periodic_recovery", err, 1e-12)
    eps = 1e-7
    lim = max(
        abs(wedge_energy(2.0 * math.pi - eps, 2, k, n_r).energy_eV - standard_energy(n_r + k + 2))
        for k in range(3)
        for n_r in range(3)
    )
    yield _check("hydrogen.limit_consistency", lim, 1e-6)
    gs = ground_state(WedgeGeometry.full_sphere())
    yield _check("wedge.periodic_ground_is_pi_squared", _rel(gs.energy_dimensionless, math.pi**2), 1e-12)


def run_all():
    """Run every check; returns (results, logged discrepancy lines)."""
    results = []
    for group in (_specfun_checks, _zeros_checks, _table1_checks, _eigenstate_checks, _observable_checks, _hydrogen_checks):
        results.extend(group())
    return results, table1_discrepancies()
