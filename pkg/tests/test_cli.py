import io
import json

import pytest

from k3moduli.cli import run


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_strata_json():
    code, out, _ = call(["strata", "--json"])
    rows = json.loads(out)
    assert code == 0 and len(rows) == 11
    assert set(rows[0]) == {"n", "c", "rank", "ell", "delta", "picard", "anti_invariant"}


def test_strata_text():
    code, out, _ = call(["strata"])
    assert code == 0 and "U + A1^6 + D4" in out


def test_quartic_text():
    code, out, _ = call(["quartic", "classify", "x^4+y^4+z^4"])
    assert code == 0 and out.strip() == "stable, type (0,0)"


def test_quartic_json_cover_and_witnesses():
    code, out, _ = call(["quartic", "classify", "y^2*z^2-x^4", "--json", "--cover", "--witnesses", "--type"])
    data = json.loads(out)
    assert code == 0
    assert data["verdict"]["class"] == "strictly_semistable"
    assert data["cover"]["moduli_location"] == "boundary_cusp"
    assert len(data["verdict"]["witnesses"]) == 2 and data["type"] is None


def test_quartic_from_stdin_and_file(monkeypatch, tmp_path):
    code, out, _ = call(["quartic", "classify", "-"], stdin="x^2*y^2+y^2*z^2+z^2*x^2\n", monkeypatch=monkeypatch)
    assert code == 0 and "type (3,0)" in out
    p = tmp_path / "curve.txt"
    p.write_text("x*y*(x+y-z)*(x-y+2*z)")
    code, out, _ = call(["quartic", "classify", str(p)])
    assert code == 0 and "type (6,0)" in out


def test_octavic():
    code, out, _ = call(["octavic", "classify", "x^4*y^4", "--json", "--cover"])
    data = json.loads(out)
    assert code == 0 and data["verdict"]["minimal_orbit"] == "two_quadruple_points"
    assert data["cover"]["moduli_location"] == "boundary_cusp"
    code, out, _ = call(["octavic", "classify", "x^5*y^3", "--cover"])
    assert code == 0 and out.startswith("unstable")


def test_lattice_commands():
    code, out, _ = call(["lattice", "invariants", "U(2)^2 + D8", "--json"])
    assert code == 0 and json.loads(out)["ell"] == 6
    code, out, _ = call(["lattice", "roots", "E8"])
    assert "240 roots" in out
    code, out, _ = call(["lattice", "complement", "D4", "--vectors", "[[1,0,0,0],[0,0,1,0]]", "--json"])
    assert len(json.loads(out)["gram"]) == 2
    code, out, _ = call(["lattice", "classify-root", "--vectors", json.dumps([0, 0, 1] + [0] * 11)])
    assert code == 0 and out.strip() == "node_class"


@pytest.mark.parametrize("argv", [["quartic", "classify", "x^4+(y"], ["quartic", "classify", "x^3"],
                                  ["octavic", "classify", "x^4"], ["lattice", "invariants", "F4"],
                                  ["lattice", "classify-root", "--vectors", "[1,0]"]])
def test_bad_input_exit_1(argv):
    code, _, err = call(argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [["bogus"], ["strata", "--nope"], [], ["quartic", "classify"],
                                  ["lattice", "complement", "D4"]])
def test_usage_exit_64(argv):
    code, _, _ = call(argv)
    assert code == 64


def test_output_is_deterministic():
    a = call(["quartic", "classify", "(x^2+y^2+z^2)^2", "--json", "--witnesses", "--cover"])
    b = call(["quartic", "classify", "(x^2+y^2+z^2)^2", "--json", "--witnesses", "--cover"])
    assert a == b


def test_verify_json_lists_every_check():
    code, out, _ = call(["verify", "--json"])
    data = json.loads(out)
    assert [c["number"] for c in data["checks"]] == list(range(1, 13))
    assert code == (0 if data["passed"] else 2)
