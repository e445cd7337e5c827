import json
from fractions import Fraction as F

import pytest

from oscillift.cli import main
from oscillift import jsonio
from oscillift.lift import LiftSolution

from conftest import fam


def write_config(path, beta, gamma, case="all", lam=None, theta=None,
                 definiteness="positive", extra=None):
    cfg = {"family": {"k": 2, "beta": [str(b) for b in beta],
                      "gamma": [str(g) for g in gamma],
                      "definiteness": definiteness},
           "request": {"case": case}}
    if lam is not None:
        cfg["request"]["lambda"] = lam
    if theta is not None:
        cfg["request"]["theta"] = theta
    if extra:
        cfg.update(extra)
    path.write_text(json.dumps(cfg))
    return path


class TestSolve:
    def test_case2_solution(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1])
        out = tmp_path / "s.json"
        assert main(["solve", "--input", str(cfg), "--output", str(out)]) == 0
        data = json.loads(out.read_text())
        assert len(data["solutions"]) == 1
        sol = data["solutions"][0]
        assert sol["case"] == "II"
        assert sol["a2"] == "-4/1"
        assert sol["beta_tilde"] == ["-2/1", "2/1", "1/1"]

    def test_wrong_case_is_input_error(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1], case="I")
        assert main(["solve", "--input", str(cfg)]) == 1

    def test_degenerate_case1_empty(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", [0, 0, 0, 1], [1, 1, 1], case="I")
        out = tmp_path / "s.json"
        assert main(["solve", "--input", str(cfg), "--output", str(out)]) == 2
        data = json.loads(out.read_text())
        assert data["solutions"] == []
        assert any("a2 = 0" in r["reason"] for r in data["rejected"])

    def test_malformed_config(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"family": {"beta": [1]}}))
        assert main(["solve", "--input", str(path)]) == 1

    def test_deterministic_output(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [2, 0, 0, 0], [1, 1, 1],
                           lam=["1/2"])
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        main(["solve", "--input", str(cfg), "--output", str(out1)])
        main(["solve", "--input", str(cfg), "--output", str(out2)])
        d1 = json.loads(out1.read_text())
        d2 = json.loads(out2.read_text())
        d1.pop("timestamp"), d2.pop("timestamp")
        assert d1 == d2


class TestVerify:
    def test_round_trip_passes(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1])
        sols = tmp_path / "s.json"
        rep = tmp_path / "v.json"
        assert main(["solve", "--input", str(cfg), "--output", str(sols)]) == 0
        assert main(["verify", "--input", str(sols), "--output", str(rep)]) == 0
        data = json.loads(rep.read_text())
        assert data["all_pass"] is True

    def test_tampered_solution_fails(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1])
        sols = tmp_path / "s.json"
        main(["solve", "--input", str(cfg), "--output", str(sols)])
        data = json.loads(sols.read_text())
        data["solutions"][0]["a2"] = "-7/2"
        sols.write_text(json.dumps(data))
        assert main(["verify", "--input", str(sols)]) == 3

    def test_empty_solutions(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 0, 1], [1, 1, 1])
        sols = tmp_path / "s.json"
        main(["solve", "--input", str(cfg), "--output", str(sols)])
        assert main(["verify", "--input", str(sols)]) == 2

    def test_missing_file(self, tmp_path):
        assert main(["verify", "--input", str(tmp_path / "nope.json")]) == 1


class TestSpectrum:
    def test_closed_form_pattern(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 1, 0, 2], [1, 1, 2],
                           extra={"truncation_dim": 8})
        out = tmp_path / "spec.json"
        assert main(["spectrum", "--input", str(cfg), "--output", str(out)]) == 0
        data = json.loads(out.read_text())
        eigs = data["p"]["eigenvalues"]
        assert eigs[:5] == pytest.approx([2, 4, 6, 6, 6])
        assert data["p"]["max_rel_dev"] <= 1e-12

    def test_lift_spectra_match(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1])
        sols = tmp_path / "s.json"
        out = tmp_path / "spec.json"
        main(["solve", "--input", str(cfg), "--output", str(sols)])
        assert main(["spectrum", "--input", str(sols), "--output", str(out),
                     "--dim", "16"]) == 0
        data = json.loads(out.read_text())
        assert data["q"][0]["algebras_equal"] is True
        assert data["q"][0]["dump"]["eigenvalues"] == \
            pytest.approx(data["p"]["eigenvalues"])

    def test_dim_too_small(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 1, 0, 2], [1, 1, 2])
        assert main(["spectrum", "--input", str(cfg), "--dim", "1"]) == 1

    def test_quasi_definite_rejected(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [0, 1, 0, 2], [1, -1, 2],
                           definiteness="quasi")
        assert main(["spectrum", "--input", str(cfg)]) == 1


class TestReport:
    def test_text_summary(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", [0, 0, 1, 0], [1, 2, 1])
        sols = tmp_path / "s.json"
        main(["solve", "--input", str(cfg), "--output", str(sols)])
        assert main(["report", "--input", str(sols)]) == 0
        captured = capsys.readouterr().out
        assert "case II" in captured

    def test_grid_flags(self, tmp_path):
        cfg = write_config(tmp_path / "c.json", [2, 0, 0, 0], [1, 1, 1])
        out = tmp_path / "s.json"
        code = main(["solve", "--input", str(cfg), "--output", str(out),
                     "--lambda-grid", "0.2:0.4:0.1", "--theta-grid", "1.0:1.0:1.0"])
        assert code == 0
        data = json.loads(out.read_text())
        tags = {s["case"] for s in data["solutions"]}
        assert "VI" in tags and "VIII" in tags


class TestSolutionRoundTrip:
    def test_json_round_trip_exact(self, family_case2):
        from oscillift import solve_case_II
        s = solve_case_II(family_case2)
        obj = jsonio.solution_to_json(s)
        back = jsonio.solution_from_json(json.loads(json.dumps(obj)))
        assert isinstance(back, LiftSolution)
        assert back.a1 == s.a1 and back.a2 == s.a2
        assert back.beta_tilde == s.beta_tilde
        assert back.q_family.gamma(5) == s.q_family.gamma(5)
