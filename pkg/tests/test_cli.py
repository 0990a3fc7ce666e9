import csv
import io
import json
import math
import subprocess
import sys

import pytest

from wedge_spectra.cli import fmt, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_proc(*argv):
    return subprocess.run([sys.executable, "-m", "wedge_spectra", *argv], capture_output=True, text=True, timeout=60)


def test_fmt_twelve_digits():
    assert fmt(math.pi) == "3.14159265359"
    assert fmt(1.0) == "1"
    assert fmt(6.02466739485471e-20) == "6.02466739485e-20"


class TestSpectrum:
    def test_hemisphere_csv(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--phi-deg", "180", "--levels", "5", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 5
        assert list(rows[0]) == ["n_phi", "k", "n_r", "mu", "nu", "chi", "E_dimless", "E_joules", "degeneracy"]
        assert float(rows[0]["E_dimless"]) == pytest.approx(20.1907, abs=1e-4)
        assert (rows[0]["n_phi"], rows[0]["k"], rows[0]["n_r"]) == ("1", "0", "1")
        energies = [float(r["E_dimless"]) for r in rows]
        assert energies == sorted(energies)

    def test_periodic(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--mode", "periodic", "--levels", "1")
        doc = json.loads(out)
        assert code == 0
        assert doc["rows"][0]["E_dimless"] == pytest.approx(math.pi**2, rel=1e-11)
        assert doc["rows"][0]["degeneracy"] == 1
        assert doc["discrepancy_log"] == []

    def test_third_sphere_logs_discrepancy(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--phi-deg", "120", "--levels", "1")
        doc = json.loads(out)
        assert doc["rows"][0]["E_dimless"] == pytest.approx(26.375, abs=1e-3)
        assert len(doc["discrepancy_log"]) == 1 and "27.42" in doc["discrepancy_log"][0]

    def test_csv_discrepancy_on_stderr(self, capsys):
        _, out, err = run(capsys, "spectrum", "--phi-deg", "120", "--levels", "1", "--format", "csv")
        assert "27.42" in err and "27.42" not in out

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--phi-deg", "90", "--levels", "8")
        doc = json.loads(out)
        assert doc["schema_version"] == "wedge-spectra/1"
        assert doc["command"] == "spectrum"
        for row in doc["rows"]:
            for key, val in row.items():
                if isinstance(val, float):
                    assert float(fmt(val)) == val

    def test_csv_golden(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--phi-deg", "180", "--levels", "3", "--format", "csv")
        lines = out.splitlines()
        assert lines[1].startswith("1,0,1,1,1,4.49340945791,20.1907285564,")
        # nu = 2 is reached from two towers; lexicographic order decides
        assert lines[2].startswith("1,1,1,1,2,5.76345919689,33.2174619143,")
        assert lines[3].startswith("2,0,1,2,2,5.76345919689,33.2174619143,")

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "out.csv"
        code, out, _ = run(capsys, "spectrum", "--phi-deg", "180", "--levels", "2", "--format", "csv", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("n_phi,k,n_r,")

    def test_cap_too_small(self, capsys):
        code, _, err = run(capsys, "spectrum", "--phi-deg", "180", "--levels", "20", "--cap-nphi", "1", "--cap-k", "1", "--cap-nr", "1")
        assert code == 3
        assert "caps" in err


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["spectrum", "--levels", "3"],
            ["spectrum", "--phi-deg", "400"],
            ["spectrum", "--phi-deg", "90", "--phi-rad", "1"],
            ["spectrum", "--mode", "periodic", "--phi-deg", "90"],
            ["spectrum", "--phi-deg", "90", "--levels", "0"],
            ["state", "--phi-deg", "90", "--nphi", "0"],
            ["state", "--phi-deg", "90", "--nr", "0"],
            ["observables", "--mode", "periodic"],
            ["hydrogen", "--phi-deg", "120", "--nphi", "1", "--nr", "-1"],
            ["hydrogen", "--phi-deg", "120", "--window", "-1", "0"],
            ["nonsense"],
        ],
    )
    def test_exit_two(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


class TestState:
    def test_polar_equator(self, capsys):
        code, out, _ = run(capsys, "state", "--factor", "polar", "--mu", "1", "--k", "0", "--n-theta", "3")
        doc = json.loads(out)
        assert code == 0
        assert doc["rows"][0]["value"] == 0.0
        assert doc["rows"][1]["value"] == pytest.approx(math.sqrt(3) / 2, abs=1e-11)
        assert doc["summary"]["norm"] == pytest.approx(1.0, abs=1e-8)

    def test_psi_walls_and_norm(self, capsys):
        code, out, _ = run(capsys, "state", "--phi-deg", "120", "--nphi", "1")
        doc = json.loads(out)
        assert code == 0
        assert abs(doc["summary"]["norm"] - 1) < 1e-6
        for row in doc["rows"]:
            wall = row["r"] in (0.0, 1.0) or row["theta"] in (0.0, math.pi) or row["phi"] == 0.0
            if wall or row["phi"] == pytest.approx(2 * math.pi / 3):
                assert abs(row["value"]) < 1e-12

    @pytest.mark.parametrize("factor", ["radial", "azimuthal"])
    def test_factor_norms(self, factor, capsys):
        _, out, _ = run(capsys, "state", "--phi-deg", "200", "--factor", factor, "--nphi", "2", "--nr", "2")
        assert json.loads(out)["summary"]["norm"] == pytest.approx(1.0, abs=1e-7)

    def test_periodic_state(self, capsys):
        _, out, _ = run(capsys, "state", "--mode", "periodic", "--m", "-1", "--k", "1")
        doc = json.loads(out)
        assert doc["summary"]["nu"] == 2
        assert abs(doc["summary"]["norm"] - 1) < 1e-6


class TestObservables:
    def test_hemisphere(self, capsys):
        _, out, _ = run(capsys, "observables", "--phi-deg", "180", "--nphi", "1")
        row = json.loads(out)["rows"][0]
        assert row["uncertainty_numeric"] == pytest.approx(1.0, rel=1e-8)
        assert abs(row["mean_numeric"]) < 1e-10
        assert (row["plus_weight"], row["minus_weight"]) == (0.5, 0.5)

    def test_third_sphere_several(self, capsys):
        _, out, _ = run(capsys, "observables", "--phi-deg", "120", "--nphi", "1", "--count", "3", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [float(r["uncertainty_numeric"]) for r in rows] == pytest.approx([1.5, 3.0, 4.5], rel=1e-8)


class TestHydrogen:
    def _energy(self, capsys, *argv):
        code, out, _ = run(capsys, "hydrogen", *argv)
        assert code == 0
        return json.loads(out)["rows"][0]["E_eV"]

    def test_examples(self, capsys):
        assert self._energy(capsys, "--phi-deg", "120", "--nphi", "1", "--k", "0", "--nr", "0") == pytest.approx(-2.176, abs=1e-3)
        assert self._energy(capsys, "--mode", "periodic", "--m", "0", "--k", "0", "--nr", "0") == pytest.approx(-13.606, abs=1e-3)
        assert self._energy(capsys, "--phi-deg", "180", "--nphi", "1", "--k", "0", "--nr", "0") == pytest.approx(-3.401, abs=1e-3)

    def test_window_scan(self, capsys):
        _, out, _ = run(capsys, "hydrogen", "--phi-deg", "180", "--window", "-1.6", "-1.4")
        doc = json.loads(out)
        assert doc["summary"]["cross_tower_coincidences"] >= 1
        assert all(-1.6 <= r["E_eV"] <= -1.4 for r in doc["rows"])


class TestTable1:
    def test_rows_and_log(self, capsys):
        code, out, _ = run(capsys, "table1", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 4
        _, out, _ = run(capsys, "table1")
        doc = json.loads(out)
        assert any("third_sphere" in line and "27.42" in line for line in doc["discrepancy_log"])


def test_verify_subprocess():
    proc = run_proc("verify")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "table1.third_sphere: oracle 26.375 vs paper 27.42 (logged)" in proc.stdout
    for mu in ("1", "1.5", "0.809017"):
        assert any("shooting" in line and mu in line and line.startswith("[PASS]") for line in proc.stdout.splitlines())
    assert "[FAIL]" not in proc.stdout


def test_subprocess_usage_exit_code():
    proc = run_proc("spectrum")
    assert proc.returncode == 2
    assert "phi" in proc.stderr
