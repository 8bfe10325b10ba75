import json

import pytest

from edgeschur.cli import main, parse_partition, parse_window


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip()


class TestParsing:
    def test_partition(self):
        assert parse_partition("3,2").parts == (3, 2)
        assert parse_partition("").parts == ()
        assert parse_partition("2,0", extent=2).parts == (2, 0)

    def test_window(self):
        assert parse_window("-2:1") == (-2, 1)


class TestExpand:
    def test_edge_paper_example(self, capsys):
        code, out = run(capsys, "expand", "--family", "edge", "--lambda",
                        "2,0", "--extent", "2", "--n", "2",
                        "--window", "-2:1")
        assert code == 0
        assert out == ("x1^2 + x1*x2 + x2^2 + a(-1)*x1^2*x2 + a0*x1^2*x2"
                       " + a1*x1^2*x2 + a(-1)*x1*x2^2 + a0*x1*x2^2"
                       " + a1*x1*x2^2 + a(-1)*a0*x1^2*x2^2"
                       " + a(-1)*a1*x1^2*x2^2 + a0*a1*x1^2*x2^2")

    def test_empty_schur(self, capsys):
        code, out = run(capsys, "expand", "--family", "schur", "--lambda", "")
        assert code == 0 and out == "1"

    def test_dualschur(self, capsys):
        code, out = run(capsys, "expand", "--family", "dualschur", "--lambda",
                        "1", "--m", "1", "--trunc", "5")
        assert code == 0 and out == "y1 + a0*y1^2 + a0^2*y1^3"

    def test_dualschur_needs_trunc(self, capsys):
        code, _ = run(capsys, "expand", "--family", "dualschur",
                      "--lambda", "1")
        assert code == 2

    def test_schur_expand_option(self, capsys):
        code, out = run(capsys, "expand", "--family", "edge", "--lambda", "1",
                        "--extent", "1", "--n", "2", "--window", "-1:1",
                        "--schur-expand", "2")
        assert code == 0
        assert "s(1,1): a(-1) + a0 + a1" in out


class TestVerify:
    def test_yb_pass(self, capsys):
        code, _ = run(capsys, "verify", "yb", "--kind", "RLL_L")
        assert code == 0

    def test_yb_perturbed_detected(self, capsys):
        code, _ = run(capsys, "verify", "yb", "--kind", "RLL_L",
                      "--perturb", "a1")
        assert code == 0  # suite passes because the perturbation failed

    def test_freefermion(self, capsys):
        code, out = run(capsys, "verify", "freefermion")
        assert code == 0 and json.loads(out) == \
            {"L": True, "Lstar": True, "Ell": True}

    def test_cauchy(self, capsys):
        code, _ = run(capsys, "verify", "cauchy", "--n", "1", "--m", "1",
                      "--window", "-2:3", "--trunc", "4")
        assert code == 0

    def test_symmetry_small(self, capsys):
        code, _ = run(capsys, "verify", "symmetry", "--box", "2:2",
                      "--n", "3", "--window", "-2:2")
        assert code == 0

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "verify", "nonsense")
        assert exc.value.code == 2


class TestCrystalAndUncrowd:
    def test_crystal_summary(self, capsys, tmp_path):
        dot = tmp_path / "g.dot"
        code, out = run(capsys, "crystal", "--lambda", "1", "--n", "2",
                        "--window", "0:0", "--dot", str(dot))
        assert code == 0
        data = json.loads(out[:out.rindex("}") + 1])
        assert data["vertices"] == 3
        assert dot.exists()
        assert "digraph" in dot.read_text()

    def test_uncrowd_roundtrip(self, capsys, tmp_path):
        blob = {
            "shape": {"outer": {"parts": [2], "extent": 1},
                      "inner": {"parts": [], "extent": 1}},
            "extent": 1, "window": [-1, 2],
            "entries": [[1, 1, 1], [1, 2, 1]],
            "edges": [[2, 1, [2]]],
        }
        f = tmp_path / "t.json"
        f.write_text(json.dumps(blob))
        code, out = run(capsys, "uncrowd", "--in", str(f), "--roundtrip")
        assert code == 0
        assert "round trip ok" in out

    def test_tableaux_count(self, capsys):
        code, out = run(capsys, "tableaux", "--lambda", "2,0", "--extent",
                        "2", "--n", "2", "--window", "-2:1", "--edges",
                        "--limit", "0")
        assert code == 0
        assert out.startswith("12 edge labeled tableaux")
