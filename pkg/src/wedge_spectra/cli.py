"""Command-line interface: ``wedge-spectra <command> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration caps too small.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import eigenstates as es
from .hydrogen import degeneracy_scan, periodic_recovery, wedge_energy
from .observables import lz_stats_analytic, lz_stats_numeric, standing_wave_decomposition
from .quadrature import DEFAULT_ABS_TOL, integrate
from .verification import run_all, table1_discrepancies, table1_rows
from .wedge_model import (
    DEFAULT_CAPS,
    CapTooSmallError,
    QuantumNumbers,
    WedgeGeometry,
    enumerate_levels,
)

SCHEMA_VERSION = "wedge-spectra/1"
EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# reference geometries with published ground energies, matched when the requested angle is one of them
_PUBLISHED_GROUND = {
    2.0 * math.pi: ("full sphere", 9.87),
    math.pi: ("hemisphere", 20.19),
    2.0 * math.pi / 3.0: ("third-sphere", 27.42),
    math.pi / 2.0: ("quarter-sphere", 33.21),
}


def fmt(x) -> str:
    return format(float(x), ".12g")


def _num(x):
    if isinstance(x, bool) or isinstance(x, (int, np.integer)) or isinstance(x, str):
        return x
    return float(fmt(x))


@dataclass
class OutputRecord:
    command: str
    geometry: dict | None
    rows: list
    discrepancy_log: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        doc = {
            "schema_version": self.schema_version,
            "command": self.command,
            "geometry": _clean(self.geometry),
            "rows": [_clean(r) for r in self.rows],
            "summary": _clean(self.summary),
            "discrepancy_log": list(self.discrepancy_log),
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            writer = csv.writer(buf, lineterminator="\n")
            header = list(self.rows[0])
            writer.writerow(header)
            for row in self.rows:
                writer.writerow([_csv_cell(row[h]) for h in header])
        return buf.getvalue()


def _clean(obj):
    if obj is None:
        return None
    return {k: _num(v) for k, v in obj.items()}


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer, str)):
        return str(v)
    return fmt(v)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def _add_geometry_flags(p):
    p.add_argument("--mode", choices=["wedge", "periodic"], default="wedge")
    angle = p.add_mutually_exclusive_group()
    angle.add_argument("--phi-deg", type=float, help="wedge angle in degrees")
    angle.add_argument("--phi-rad", type=float, help="wedge angle in radians")
    p.add_argument("--radius", type=float, default=1.0, help="sphere radius in metres (default 1)")
    p.add_argument("--mass", type=float, default=1.0, help="particle mass in kg (default 1)")


def _add_output_flags(p):
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--output", help="write here instead of standard output")


def _phi_extent(args):
    if args.mode == "periodic":
        if args.phi_deg is not None or args.phi_rad is not None:
            raise UsageError("periodic mode takes no wedge angle")
        return 2.0 * math.pi
    if args.phi_deg is None and args.phi_rad is None:
        raise UsageError("wedge mode needs exactly one of --phi-deg / --phi-rad")
    return math.radians(args.phi_deg) if args.phi_deg is not None else args.phi_rad


def _geometry(args):
    phi = _phi_extent(args)
    try:
        if args.mode == "periodic":
            return WedgeGeometry.full_sphere(args.radius, args.mass)
        return WedgeGeometry.wedge(phi, args.radius, args.mass)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _geometry_echo(geom):
    return {
        "boundary_mode": geom.boundary_mode.value,
        "phi_extent": geom.phi_extent,
        "phi_deg": math.degrees(geom.phi_extent),
        "radius": geom.radius,
        "mass": geom.mass,
    }


def _published_ground(geom):
    for phi, entry in _PUBLISHED_GROUND.items():
        if abs(geom.phi_extent - phi) < 1e-9 and (geom.periodic == (phi == 2.0 * math.pi)):
            return entry
    return None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_spectrum(args) -> OutputRecord:
    geom = _geometry(args)
    if args.levels < 1:
        raise UsageError("--levels must be >= 1")
    caps = (args.cap_nphi, args.cap_k, args.cap_nr)
    levels = enumerate_levels(geom, args.levels, caps)
    rows = []
    for lv in levels:
        rows.append(
            {
                "n_phi" if not geom.periodic else "m": lv.qn.n_phi,
                "k": lv.qn.k_polar,
                "n_r": lv.qn.n_r,
                "mu": lv.mu,
                "nu": lv.nu,
                "chi": lv.chi,
                "E_dimless": lv.energy_dimensionless,
                "E_joules": lv.energy_joules,
                "degeneracy": lv.degeneracy,
            }
        )
    log = []
    published = _published_ground(geom)
    if published is not None:
        name, value = published
        e0 = levels[0].energy_dimensionless
        if abs(e0 - value) > 0.01:
            log.append(
                f"{name} ground state: computed {e0:.3f} (chi = {levels[0].chi:.6f}) "
                f"differs from the published value {value:.2f}"
            )
    return OutputRecord("spectrum", _geometry_echo(geom), rows, log)


def _regular_grid(a, b, n):
    return [float(v) for v in np.linspace(a, b, n)]


def cmd_state(args) -> OutputRecord:
    factor = args.factor
    if args.k < 0 or args.nr < 1:
        raise UsageError("need --k >= 0 and --nr >= 1")
    summary = {}
    rows = []
    geom = None
    if factor == "polar" and args.mu is not None:
        if args.mu < 0.0:
            raise UsageError("--mu must be >= 0")
        mu = args.mu
    else:
        geom = _geometry(args)
        if geom.periodic:
            if args.m is None:
                raise UsageError("periodic mode needs --m")
            n_az = args.m
        else:
            n_az = args.nphi
            if n_az is None or n_az < 1:
                raise UsageError("wedge mode needs --nphi >= 1")
        qn = QuantumNumbers(n_az, args.k, args.nr)
        mu = qn.mu(geom)
    sol = es.polar_solution(mu, args.k)
    thetas = _regular_grid(0.0, math.pi, args.n_theta)

    if factor == "polar":
        rows = [{"theta": t, "value": es.polar_eval(sol, t)} for t in thetas]
        summary["norm"] = integrate(lambda t: es.polar_eval(sol, t) ** 2 * math.sin(t), 0.0, math.pi).value
    elif factor == "azimuthal":
        phis = _regular_grid(0.0, geom.phi_extent, args.n_phi_grid)
        if geom.periodic:
            f = lambda p: es.periodic_azimuthal_eval(qn.n_phi, p)  # noqa: E731
        else:
            f = lambda p: es.azimuthal_eval(geom, qn.n_phi, p)  # noqa: E731
        rows = [{"phi": p, "value": f(p)} for p in phis]
        summary["norm"] = integrate(lambda p: f(p) ** 2, 0.0, geom.phi_extent).value
    elif factor == "radial":
        rs = _regular_grid(0.0, geom.radius, args.n_r_grid)
        rows = [{"r": r, "value": es.radial_eval(geom, sol.nu, qn.n_r, r)} for r in rs]
        summary["norm"] = integrate(
            lambda r: es.radial_eval(geom, sol.nu, qn.n_r, r) ** 2 * r * r, 0.0, geom.radius, abs_tol=1e-9
        ).value
    else:
        rs = _regular_grid(0.0, geom.radius, args.n_r_grid)
        phis = _regular_grid(0.0, geom.phi_extent, args.n_phi_grid)
        grid = es.psi_grid(geom, qn, rs, thetas, phis)
        for i, r in enumerate(rs):
            for j, t in enumerate(thetas):
                for l, p in enumerate(phis):
                    rows.append({"r": r, "theta": t, "phi": p, "value": float(grid[i, j, l])})
        summary["norm"] = es.psi_norm_tensor(geom, qn)
    summary.update({"mu": mu, "nu": sol.nu, "k": args.k})
    return OutputRecord("state", _geometry_echo(geom) if geom else None, rows, summary=summary)


def cmd_observables(args) -> OutputRecord:
    geom = _geometry(args)
    if geom.periodic:
        raise UsageError("observables are defined for wedge mode only; periodic states are L_z eigenstates")
    if args.nphi < 1:
        raise UsageError("--nphi must be >= 1")
    rows = []
    for n in range(args.nphi, args.nphi + args.count):
        ana = lz_stats_analytic(geom, n)
        num = lz_stats_numeric(geom, n, args.tol)
        dec = standing_wave_decomposition(geom, n)
        rows.append(
            {
                "n_phi": n,
                "mean_analytic": ana.mean,
                "mean_numeric": num.mean,
                "mean_square_analytic": ana.mean_square,
                "mean_square_numeric": num.mean_square,
                "uncertainty_analytic": ana.uncertainty,
                "uncertainty_numeric": num.uncertainty,
                "plus_weight": dec.plus_weight,
                "minus_weight": dec.minus_weight,
                "eigenvalue_magnitude": dec.eigenvalue_magnitude,
            }
        )
    return OutputRecord("observables", _geometry_echo(geom), rows)


def _hydrogen_row(lv, periodic):
    return {
        "m" if periodic else "n_phi": lv.n_phi,
        "k": lv.k_polar,
        "n_r": lv.n_r,
        "nu": lv.nu,
        "n_eff": lv.effective_principal,
        "E_eV": lv.energy_eV,
    }


def cmd_hydrogen(args) -> OutputRecord:
    phi = _phi_extent(args)
    periodic = args.mode == "periodic"
    if args.k < 0 or args.nr < 0:
        raise UsageError("need --k >= 0 and --nr >= 0 (n_r counts radial nodes from 0)")
    echo = {"boundary_mode": "periodic_full_sphere" if periodic else "dirichlet_wedge", "phi_extent": phi}
    summary = {}
    if args.window is not None:
        if periodic:
            raise UsageError("--window scans wedge mode only")
        try:
            report = degeneracy_scan(phi, tuple(args.window))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rows = []
        for key, lvs in report.groups.items():
            for lv in lvs:
                row = _hydrogen_row(lv, False)
                row["group_size"] = len(lvs)
                rows.append(row)
        summary["degenerate_groups"] = len(report.degenerate_groups)
        summary["cross_tower_coincidences"] = len(report.cross_tower_groups)
        return OutputRecord("hydrogen", echo, rows, summary=summary)
    try:
        if periodic:
            if args.m is None:
                raise UsageError("periodic mode needs --m")
            lv = periodic_recovery(args.m, args.k, args.nr)
        else:
            if args.nphi is None:
                raise UsageError("wedge mode needs --nphi")
            lv = wedge_energy(phi, args.nphi, args.k, args.nr)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return OutputRecord("hydrogen", echo, [_hydrogen_row(lv, periodic)])


def cmd_table1(args) -> OutputRecord:
    rows = table1_rows()
    return OutputRecord("table1", None, rows, table1_discrepancies(rows))


def cmd_verify(args) -> tuple[str, int]:
    results, logged = run_all()
    lines = [r.line() for r in results]
    lines.extend(f"[LOG] {entry}" for entry in logged)
    failed = [r for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", (EXIT_VERIFY if failed else EXIT_OK)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wedge-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="lowest box energy levels")
    _add_geometry_flags(p)
    _add_output_flags(p)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--cap-nphi", type=int, default=DEFAULT_CAPS[0])
    p.add_argument("--cap-k", type=int, default=DEFAULT_CAPS[1])
    p.add_argument("--cap-nr", type=int, default=DEFAULT_CAPS[2])

    p = sub.add_parser("state", help="evaluate psi or one factor on a regular grid")
    _add_geometry_flags(p)
    _add_output_flags(p)
    p.add_argument("--factor", choices=["psi", "radial", "polar", "azimuthal"], default="psi")
    p.add_argument("--nphi", type=int, default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--nr", type=int, default=1)
    p.add_argument("--mu", type=float, help="polar factor only: use this mu directly")
    p.add_argument("--n-r-grid", type=int, default=5)
    p.add_argument("--n-theta", type=int, default=9)
    p.add_argument("--n-phi-grid", type=int, default=5)

    p = sub.add_parser("observables", help="L_z statistics of wedge states")
    _add_geometry_flags(p)
    _add_output_flags(p)
    p.add_argument("--nphi", type=int, default=1)
    p.add_argument("--count", type=int, default=1, help="number of consecutive n_phi values")
    p.add_argument("--tol", type=float, default=DEFAULT_ABS_TOL)

    p = sub.add_parser("hydrogen", help="hydrogen levels in a wedge or the full sphere")
    p.add_argument("--mode", choices=["wedge", "periodic"], default="wedge")
    angle = p.add_mutually_exclusive_group()
    angle.add_argument("--phi-deg", type=float)
    angle.add_argument("--phi-rad", type=float)
    _add_output_flags(p)
    p.add_argument("--nphi", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--nr", type=int, default=0)
    p.add_argument("--window", type=float, nargs=2, metavar=("LO_EV", "HI_EV"), help="degeneracy scan window")

    p = sub.add_parser("table1", help="ground energies of the four reference geometries")
    _add_output_flags(p)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--output")
    return parser


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "state": cmd_state,
    "observables": cmd_observables,
    "hydrogen": cmd_hydrogen,
    "table1": cmd_table1,
}


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        text, code = cmd_verify(args)
        _emit(text, args.output)
        return code
    try:
        record = _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except CapTooSmallError as exc:
        print(f"wedge-spectra: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.format == "json":
        _emit(record.to_json(), args.output)
    else:
        _emit(record.to_csv(), args.output)
        for entry in record.discrepancy_log:
            print(f"discrepancy: {entry}", file=sys.stderr)
        for key, value in record.summary.items():
            print(f"summary: {key}={fmt(value) if isinstance(value, float) else value}", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
