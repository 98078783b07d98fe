"""Front-end contract: flags, formats, exit codes, byte determinism."""
import json
import subprocess
import sys

import pytest

import hahnkit.oracle as oracle_mod
from hahnkit.cli import main
from hahnkit.hahn_bi import BiParams, overlap2, p2_eval
from hahnkit.hahn_uni import UniParams, hahn_eval, hahn_norm
from hahnkit.numeric import Rat, format_rational


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_hahn1_exact(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--family", "hahn1", "--alpha", "1/2,0",
            "--N", "3", "--degrees", "2", "--point", "1",
        )
        assert code == 0
        payload = json.loads(out)
        expected = format_rational(hahn_eval(2, 1, UniParams(Rat(1, 2), 0, 3)))
        assert payload["entries"] == [expected]
        assert payload["rows"] == ["1"] and payload["cols"] == ["2"]
        assert payload["mode"] == "exact"

    def test_hahn2_csv(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--family", "hahn2", "--alpha", "0,0,0",
            "--N", "1", "--degrees", "0,1", "--point", "0,0", "--format", "csv",
        )
        assert code == 0
        assert out == ",0.1\n0.0,2\n"

    def test_hahnd_float(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--family", "hahnd", "--alpha", "0,0,0,0",
            "--N", "2", "--degrees", "1,0,0", "--point", "0,1,0", "--mode", "float",
        )
        assert code == 0
        assert json.loads(out)["entries"] == ["-1"]

    def test_bad_arity(self, capsys):
        code, _, err = run(
            capsys, "eval", "--family", "hahn1", "--alpha", "0,0",
            "--N", "3", "--degrees", "1,2", "--point", "1",
        )
        assert code == 2 and err.startswith("error:")

    def test_decimal_alpha_rejected(self, capsys):
        code, _, err = run(
            capsys, "eval", "--family", "hahn1", "--alpha", "0.5,0",
            "--N", "3", "--degrees", "1", "--point", "1",
        )
        assert code == 2 and "rational" in err

    def test_off_simplex(self, capsys):
        code, _, err = run(
            capsys, "eval", "--family", "hahn2", "--alpha", "0,0,0",
            "--N", "1", "--degrees", "1,1", "--point", "0,0",
        )
        assert code == 2 and "simplex" in err


class TestOverlap:
    def test_trivial_level_csv(self, capsys):
        code, out, _ = run(capsys, "overlap", "--N", "0", "--alpha", "0,0,0", "--format", "csv")
        assert code == 0
        assert out == ",0.0\n0.0,1\n"

    def test_float_entries_match_library(self, capsys):
        code, out, _ = run(capsys, "overlap", "--alpha", "1/2,-1/2,3", "--N", "2")
        assert code == 0
        payload = json.loads(out)
        matrix = overlap2(BiParams(Rat(1, 2), Rat(-1, 2), 3, 2), mode="float")
        expected = [f"{v:.17g}" for row in matrix.entries for v in row]
        assert payload["entries"] == expected
        assert payload["rows"] == ["0.0", "1.0", "2.0", "0.1", "1.1", "0.2"]

    def test_exact_mode_squares(self, capsys):
        code, out, _ = run(capsys, "overlap", "--alpha", "0,0,0", "--N", "1", "--mode", "exact")
        assert code == 0
        payload = json.loads(out)
        matrix = overlap2(BiParams(0, 0, 0, 1), mode="squared")
        assert payload["entries"] == [
            format_rational(v) for row in matrix.entries for v in row
        ]
        assert payload["mode"] == "exact"


class TestChain:
    def test_product_matches_overlap(self, capsys):
        code, out, _ = run(capsys, "chain", "--alpha", "1/2,-1/2,3", "--N", "3")
        assert code == 0
        payload = json.loads(out)
        matrix = overlap2(BiParams(Rat(1, 2), Rat(-1, 2), 3, 3), mode="float")
        flat = [v for row in matrix.entries for v in row]
        got = [float(v) for v in payload["entries"]]
        assert max(abs(a - b) for a, b in zip(got, flat)) < 1e-10

    def test_exact_mode_rejected(self, capsys):
        code, _, err = run(capsys, "chain", "--alpha", "0,0,0", "--N", "2", "--mode", "exact")
        assert code == 2 and "floating point" in err


class TestGenfun:
    def test_univariate(self, capsys):
        code, out, _ = run(capsys, "genfun", "--alpha", "1/2,7/3", "--N", "3")
        assert code == 0
        payload = json.loads(out)
        assert [c["name"] for c in payload["checks"]] == ["genfun", "dual-genfun"]
        assert payload["status"] == "pass"

    def test_bivariate(self, capsys):
        code, out, _ = run(capsys, "genfun", "--alpha", "0,1/2,3", "--N", "3")
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_wrong_parameter_count(self, capsys):
        code, _, err = run(capsys, "genfun", "--alpha", "0,0,0,0", "--N", "2")
        assert code == 2 and "genfun takes" in err


class TestVerify:
    def test_uni_spec_example(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "uni", "--alpha", "0,0", "--N", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "pass"
        assert payload["params"] == {"alpha": "0", "beta": "0", "N": 2}
        # the Gram diagonal this report certifies
        u = UniParams(0, 0, 2)
        assert [hahn_norm(n, u) for n in range(3)] == [1, Rat(8, 3), 32]

    def test_single_check(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "bi", "--check", "diff-L1",
            "--alpha", "0,0,0", "--N", "1",
        )
        assert code == 0
        payload = json.loads(out)
        assert [c["name"] for c in payload["checks"]] == ["diff-L1"]

    def test_mv_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "mv", "--alpha", "1/2,0,3", "--N", "3")
        assert code == 0
        assert json.loads(out)["suite"] == "mv"

    def test_oracle_suite(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "oracle", "--alpha", "0,0,0", "--N", "3",
            "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "suite,check,status,max_residual"
        assert all(line.split(",")[2] == "pass" for line in lines[1:])

    def test_classical_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "classical", "--alpha", "1/2,7/3", "--N", "5")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["checks"]) == 7

    def test_classical_single_relation(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "classical", "--check", "laguerre-addition",
            "--alpha", "1/2,7/3", "--N", "4",
        )
        assert code == 0
        assert [c["name"] for c in json.loads(out)["checks"]] == ["laguerre-addition"]

    def test_all_battery(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "pass"
        assert [r["suite"] for r in payload["suites"]] == [
            "classical", "uni", "uni", "uni", "bi", "bi", "mv", "mv", "oracle",
        ]

    def test_all_rejects_parameters(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "all", "--alpha", "0,0")
        assert code == 2 and "battery" in err

    def test_unknown_check(self, capsys):
        code, _, err = run(
            capsys, "verify", "--suite", "uni", "--check", "spectral-flow",
            "--alpha", "0,0", "--N", "2",
        )
        assert code == 2 and "unknown check" in err

    def test_tol_tightening_fails(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "bi", "--check", "normalized-recurrence-float",
            "--alpha", "0,0,0", "--N", "4", "--tol", "1e-17",
        )
        assert code == 1
        assert json.loads(out)["status"] == "fail"

    def test_fault_injection(self, capsys, monkeypatch):
        orig = oracle_mod._shift_coeffs

        def tampered(label, i, k, a1, a2, a3, N):
            out = orig(label, i, k, a1, a2, a3, N)
            if label == "L2" and (i, k) == (1, 1):
                out = dict(out)
                out[(1, 0)] = out[(1, 0)] * 2
            return out

        monkeypatch.setattr(oracle_mod, "_shift_coeffs", tampered)
        code, out, _ = run(
            capsys, "verify", "--suite", "oracle", "--check", "joint-eigenvectors",
            "--alpha", "0,0,0", "--N", "3",
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["status"] == "fail"
        assert "counterexample" in payload["checks"][0]


class TestPlumbing:
    def test_missing_level(self, capsys):
        code, _, err = run(capsys, "overlap", "--alpha", "0,0,0")
        assert code == 2 and "--N" in err

    def test_nonpositive_tol(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "all", "--tol", "0")
        assert code == 2 and "tol" in err

    def test_unknown_suite_is_usage_error(self, capsys):
        assert main(["verify", "--suite", "nope", "--alpha", "0,0", "--N", "1"]) == 2
        capsys.readouterr()

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "verify", "--suite", "uni", "--alpha", "0,0", "--N", "2",
            "--out", str(target),
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["status"] == "pass"

    def test_byte_determinism(self, capsys):
        argv = ["overlap", "--alpha", "1/2,-1/2,3", "--N", "4", "--format", "csv"]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hahnkit", "verify", "--suite", "uni",
             "--alpha", "0,0", "--N", "2"],
            capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["status"] == "pass"
