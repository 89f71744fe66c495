import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from k3moduli import octavic as o

X, Y = sympy.symbols("x y")


def test_parse():
    f = o.parse_octavic("x^8+y^8")
    assert f.coefficients[0] == 1 and f.coefficients[8] == 1
    with pytest.raises(o.OctavicError):
        o.parse_octavic("x^7")
    with pytest.raises(o.OctavicError):
        o.parse_octavic("x^8 + y")
    with pytest.raises(o.OctavicError):
        o.BinaryOctavic((0,) * 9)


@pytest.mark.parametrize("text, profile", [
    ("x^8+y^8", (1,) * 8),
    ("x^4*y^4", (4, 4)),
    ("x^5*y^3", (5, 3)),
    ("x^2*(x-y)^2*(x+y)^2*y^2", (2, 2, 2, 2)),
    ("(x^2+y^2)^4", (4, 4)),
    ("y^8", (8,)),
    ("x*y^7", (7, 1)),
])
def test_profiles(text, profile):
    assert o.multiplicities(text).profile == profile


def test_root_at_infinity_from_degree_drop():
    m = o.multiplicities("x^5*y^3")
    assert {(r.factor, r.multiplicity) for r in m.factors} == {("x", 5), ("y", 3)}


def test_eight_simple_roots_one_factor():
    (r,) = o.multiplicities("x^8+y^8").factors
    assert (r.multiplicity, r.degree) == (1, 8)


@pytest.mark.parametrize("text, cls, orbit", [
    ("x^8+y^8", "stable", None),
    ("x^4*y^4", "strictly_semistable", o.TWO_QUADRUPLE_POINTS),
    ("x^5*y^3", "unstable", None),
    ("x^4*(x^4+y^4)", "strictly_semistable", "not_minimal"),
    ("x^3*y^3*(x^2+y^2)", "stable", None),
])
def test_stability(text, cls, orbit):
    v = o.octavic_stability(text)
    assert (v.stability, v.minimal_orbit) == (cls, orbit)


@pytest.mark.parametrize("text, sing", [
    ("x^8+y^8", []),
    ("x^2*(x^6+y^6)", ["node"]),
    ("(x-y)^4*(x-2*y)^4", ["tacnode", "tacnode"]),
    ("x^3*y^5", ["cusp", "higher"]),
])
def test_cone_singularities(text, sing):
    assert o.cone_curve_singularities(text) == sorted(sing)


coeffs = st.lists(st.integers(-3, 3), min_size=9, max_size=9).filter(any)
matrices = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))


def _structured(draw_roots):
    """Octavic with prescribed rational root multiplicities."""
    expr = 1
    for (a, b), m in draw_roots:
        expr *= (a * X - b * Y) ** m
    return o.BinaryOctavic.from_dict({k: int(v) for k, v in sympy.Poly(expr, X, Y).terms()})


def _partitions(n, cap):
    if n == 0:
        yield ()
    for k in range(min(n, cap), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


mult_lists = st.sampled_from(list(_partitions(8, 5))).flatmap(st.permutations)


@settings(max_examples=40, deadline=None)
@given(mult_lists, matrices)
def test_invariance_under_gl2(ms, g):
    a, b, c, d = g
    assume(a * d - b * c != 0)
    f = _structured([((1, k), m) for k, m in enumerate(ms)])
    h = f.transform(((a, b), (c, d)))
    assert o.multiplicities(h).profile == o.multiplicities(f).profile
    assert o.octavic_stability(h).stability == o.octavic_stability(f).stability


@settings(max_examples=60, deadline=None)
@given(coeffs)
def test_profile_sums_to_eight_and_swap(c):
    f = o.BinaryOctavic(tuple(c))
    prof = o.multiplicities(f).profile
    assert sum(prof) == 8
    assert o.multiplicities(f.swap()).profile == prof


@settings(max_examples=60, deadline=None)
@given(coeffs)
def test_cone_nodes_cusps_iff_stable(c):
    f = o.BinaryOctavic(tuple(c))
    only_mild = all(s in ("node", "cusp") for s in o.cone_curve_singularities(f))
    assert only_mild == (o.octavic_stability(f).stability == "stable")
