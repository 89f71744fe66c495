import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from k3moduli import quartic as q
from k3moduli.poly import ParseError, from_sympy
from k3moduli.verify import random_unimodular

x, y, z = sympy.symbols("x y z")

FERMAT = "x^4+y^4+z^4"
ONE_NODE = "y^2*z^2-x^2*z^2+x^4+y^4"
ONE_CUSP = "y^2*z^2-x^3*z+y^4"
FOUR_LINES = "x*y*(x+y-z)*(x-y+2*z)"
TACNODAL = "y^2*z^2-x^4"
TWO_CONICS = "(y*z-x^2)*(y*z+x^2)"
DOUBLE_CONIC = "(x^2+y^2+z^2)^2"
INADMISSIBLE = "(y*z+x^2)^2+x*y^3"
TRIPLE = "x^3*y+y^4"
INFLECTION = "z*(y^2*z-x^3)"


def oracle_singular_count(text):
    """Geometric singular points by sympy's polynomial solver, chart by chart."""
    f = sympy.sympify(text.replace("^", "**"))
    parts = [sympy.diff(f, v) for v in (x, y, z)]
    n = len(sympy.solve([p.subs(z, 1) for p in parts], [x, y], dict=True))
    n += len(sympy.solve([p.subs({z: 0, y: 1}) for p in parts], [x], dict=True))
    if all(p.subs({z: 0, y: 0, x: 1}) == 0 for p in parts):
        n += 1
    return n


def test_parse_quartic():
    f = q.parse_quartic(FERMAT)
    assert f.as_dict() == {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    assert len(q.parse_quartic(DOUBLE_CONIC).as_dict()) == 6


@pytest.mark.parametrize("bad, err", [("x^3+y^3", q.QuarticError), ("x^4+y", q.QuarticError),
                                      ("x-x", q.QuarticError), ("x^4+*y", ParseError)])
def test_parse_quartic_errors(bad, err):
    with pytest.raises(err):
        q.parse_quartic(bad)


def test_double_conic_detection():
    dc = q.is_double_conic(DOUBLE_CONIC)
    assert dc.rank == 3 and str(dc) == "x^2 + y^2 + z^2" and dc.scalar == 1
    dc = q.is_double_conic("x^2*y^2")
    assert dc.rank == 2 and str(dc) == "x*y"
    assert q.is_double_conic("x^4").rank == 1
    assert q.is_double_conic(FERMAT) is None
    assert q.is_double_conic("x^2*y*z") is None
    assert q.is_double_conic("-4*(x^2+y*z)^2").scalar == -4


@pytest.mark.parametrize("text", [FERMAT, ONE_NODE, ONE_CUSP, FOUR_LINES, TACNODAL, INADMISSIBLE,
                                  TRIPLE, INFLECTION, "x^4+y^4+z^4+2*x^2*z^2-y^2*z^2",
                                  "x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)"])
def test_singular_points_complete(text):
    pts = q.singular_points(text)
    assert sum(p.degree for p in pts) == oracle_singular_count(text)
    f = q.parse_quartic(text)
    for p in pts:
        for v in (x, y, z):
            partial = from_sympy(f.poly.diff(v))
            value = sum(c * p.center[0] ** m[0] * p.center[1] ** m[1] * p.center[2] ** m[2]
                        for m, c in partial.items())
            assert not value


def test_singular_points_examples():
    assert q.singular_points(FERMAT) == []
    pts = q.singular_points(TWO_CONICS)
    assert [tuple(str(c) for c in p.center) for p in pts] == [("0", "0", "1"), ("0", "1", "0")]


def test_conjugate_points_share_a_field():
    (p,) = q.singular_points("x^4+y^4+z^4+2*x^2*z^2-y^2*z^2")
    assert p.degree == 2 and p.to_json()["field"] == "QQ[t]/(t^2 + 1)"


def test_non_reduced_rejected():
    with pytest.raises(q.NonReducedError):
        q.singular_points(DOUBLE_CONIC)


def _classify_at(text, point):
    f = q.parse_quartic(text)
    from k3moduli.poly import QQ_FIELD
    return q.classify_singularity(f, q.local_model(f, QQ_FIELD, point))


@pytest.mark.parametrize("text, point, kind, admissible", [
    ("y^2*z^2-x^2*z^2+x^4", (0, 0, 1), "node", None),
    ("y^2*z^2-x^3*z", (0, 0, 1), "cusp", None),
    (TACNODAL, (0, 0, 1), "tacnode", True),
    (INADMISSIBLE, (0, 0, 1), "tacnode", False),
    (TRIPLE, (0, 0, 1), "triple_or_worse", None),
    (INFLECTION, (0, 1, 0), "higher_A", False),
])
def test_classify_singularity(text, point, kind, admissible):
    r = _classify_at(text, point)
    assert r.type == kind and r.admissible == admissible


def test_inadmissible_normal_form():
    r = _classify_at(INADMISSIBLE, (0, 0, 1))
    nf = dict(r.normal_form)
    assert nf["a21"] ** 2 - 4 * nf["a40"] == 0 and nf["alpha"] == nf["a21"] / 2


def test_classify_errors():
    with pytest.raises(q.SingularityError):
        _classify_at(FERMAT, (1, 0, 0))
    with pytest.raises(q.SingularityError):
        _classify_at("y*z^3-x^4", (0, 0, 1))


def test_node_symmetric_under_branch_swap():
    # swapping x and y exchanges the two tangent lines
    a = _classify_at("y^2*z^2-4*x^2*z^2+x^4", (0, 0, 1))
    b = _classify_at("x^2*z^2-4*y^2*z^2+y^4", (0, 0, 1))
    assert a.type == b.type == "node"


@pytest.mark.parametrize("text, cls, orbit", [
    (FERMAT, "stable", None),
    (DOUBLE_CONIC, "strictly_semistable", "double_conic"),
    (TWO_CONICS, "strictly_semistable", "two_tangent_conics"),
    (TRIPLE, "unstable", None),
    (INFLECTION, "unstable", None),
    (INADMISSIBLE, "strictly_semistable", "not_minimal"),
    ("x^2*y^2", "unstable", None),
    ("x^2*(y^2+z^2)", "unstable", None),
    ("(x^2+y^2-z^2)*(x^2+2*y^2-z^2)", "strictly_semistable", "two_tangent_conics"),
    # concentric circles are tangent at the two circular points
    ("(x^2+y^2-z^2)*(x^2+y^2-4*z^2)", "strictly_semistable", "two_tangent_conics"),
    # circles through two common real points: two real and two conjugate nodes
    ("(x^2+y^2-z^2)*(x^2+y^2-z^2+x*z)", "stable", None),
    # conics with contact of order four and three at the origin
    ("(y*z-x^2)*(y*z-x^2+y^2)", "strictly_semistable", "not_minimal"),
    ("(y*z-x^2)*(y*z-x^2+x*y)", "strictly_semistable", "not_minimal"),
])
def test_git_stability(text, cls, orbit):
    v = q.git_stability(text)
    assert (v.stability, v.minimal_orbit) == (cls, orbit)
    if orbit == "not_minimal":
        assert v.orbit_limit == "maps to v0"


def test_witness_invariants():
    for text in (FERMAT, ONE_NODE, FOUR_LINES, TRIPLE, INFLECTION, "x^2*y^2", "x^4"):
        v = q.git_stability(text)
        if v.stability == "stable":
            assert all(w.type in ("node", "cusp") for w in v.witnesses)
        if v.stability == "unstable":
            assert any(w.multiplicity >= 3 or w.type == "higher_A" for w in v.witnesses)


def test_inadmissible_limit_note():
    v = q.git_stability(INADMISSIBLE)
    assert v.orbit_limit == "maps to v0"


@pytest.mark.parametrize("text, t", [(FERMAT, (0, 0)), (ONE_NODE, (1, 0)), (ONE_CUSP, (0, 1)),
                                     (FOUR_LINES, (6, 0)), ("x^2*y^2+y^2*z^2+z^2*x^2", (3, 0)),
                                     ("x^4+y^4+z^4+2*x^2*z^2-y^2*z^2", (2, 0)),
                                     ("(x^2+y^2-z^2)*(x^2+y^2-z^2+x*z)", (4, 0))])
def test_singular_type(text, t):
    st_ = q.singular_type(text)
    assert (st_.n, st_.c) == t
    assert st_.n + st_.c <= 6


def test_singular_type_needs_stable():
    with pytest.raises(q.QuarticError):
        q.singular_type(TACNODAL)


def test_documented_one_node_example_has_a_tacnode_too():
    # the point (0:1:0) of this curve is an admissible tacnode
    v = q.git_stability("y^2*z^2-x^2*z^2+x^4")
    assert sorted(w.type for w in v.witnesses) == ["node", "tacnode"]
    v = q.git_stability("y^2*z^2-x^3*z-x^4")
    assert sorted(w.type for w in v.witnesses) == ["cusp", "tacnode"]


def test_transform_composes():
    f = q.parse_quartic(ONE_NODE)
    g = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    h = ((1, -1, 0), (0, 1, 0), (0, 0, 1))
    assert f.transform(g).transform(h) == f


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([ONE_NODE, ONE_CUSP, TACNODAL, INADMISSIBLE, INFLECTION]), st.integers(0, 10 ** 6))
def test_projective_invariance(text, seed):
    f = q.parse_quartic(text)
    g = random_unimodular(random.Random(seed))
    a, b = q.git_stability(f), q.git_stability(f.transform(g))
    assert (a.stability, a.minimal_orbit, a.orbit_limit) == (b.stability, b.minimal_orbit, b.orbit_limit)
    assert sorted((w.type, w.degree) for w in a.witnesses) == sorted((w.type, w.degree) for w in b.witnesses)


def test_json_shapes():
    v = q.git_stability(TWO_CONICS)
    j = v.to_json()
    assert set(j) == {"class", "minimal_orbit", "orbit_limit", "witnesses", "notes"}
    assert j["witnesses"][0]["point"]["center"] == ["0", "0", "1"]
