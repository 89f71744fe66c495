import pytest
from hypothesis import given, settings, strategies as st

from k3moduli import intmat
from k3moduli.lattice import (
    DegenerateLatticeError,
    Lattice,
    LatticeError,
    direct_sum,
    discriminant_data,
    invariants_equal,
    is_isometry,
    lattice_from_json,
    lattice_to_json,
    orthogonal_complement,
    rescale,
    roots,
    saturate,
    short_vectors,
    signature,
)
from k3moduli.named import make

import oracles


def test_gram_must_be_symmetric():
    with pytest.raises(LatticeError):
        Lattice(((0, 1), (2, 0)))


def test_basic_properties():
    u = make("U")
    assert u.rank == 2 and u.det == -1 and u.even and not u.degenerate
    assert Lattice(((0, 0), (0, 0))).degenerate
    assert not Lattice(((1,),)).even


def test_direct_sum_and_rescale():
    a = direct_sum(make("A1"), make("U"))
    assert a.gram == ((-2, 0, 0), (0, 0, 1), (0, 1, 0))
    assert rescale(make("U"), 2).gram == ((0, 2), (2, 0))
    with pytest.raises(LatticeError):
        rescale(make("U"), 0)


@pytest.mark.parametrize("expr", ["U", "A1", "D4", "E6", "E7", "E8", "D8", "U(2)^2 + D8",
                                  "<2>^2 + D4^3", "<2> + A1^7", "U + A1^8", "U + A1^2 + E8^2",
                                  "A3 + <4>", "U(3) + A2"])
def test_invariants_against_oracles(expr):
    lat = make(expr)
    assert signature(lat).as_tuple() == oracles.signature(lat.gram)
    dd = discriminant_data(lat)
    assert dd.invariant_factors == oracles.invariant_factors(lat.gram)
    assert dd.order == abs(lat.det)
    if dd.two_elementary and dd.ell:
        assert dd.delta == oracles.delta_two_elementary(lat.gram)


@pytest.mark.parametrize("expr, ell, delta", [
    ("D4", 2, 0),        # oracle-confirmed
    ("<2>", 1, 1),
    ("E8", 0, 0),
    ("U", 0, 0),
    ("U(2)^2 + D8", 6, 0),
])
def test_ell_delta(expr, ell, delta):
    dd = discriminant_data(make(expr))
    assert (dd.ell, dd.delta) == (ell, delta)


def test_generators_lie_in_dual():
    lat = make("D4 + <2>")
    dd = discriminant_data(lat)
    for g in dd.generators:
        for i in range(lat.rank):
            e = [int(k == i) for k in range(lat.rank)]
            assert lat.pair(g, e).denominator == 1
    assert len(dd.form_values) == len(dd.generators)


def test_delta_is_none_off_two_elementary():
    dd = discriminant_data(make("A2"))
    assert dd.invariant_factors == (3,) and dd.delta is None and not dd.two_elementary


def test_degenerate_raises():
    with pytest.raises(DegenerateLatticeError):
        discriminant_data(Lattice(((2, 2), (2, 2))))


def test_signature_with_zero_diagonal():
    assert signature(Lattice(((0, 1), (1, 0)))).as_tuple() == (1, 1, 0)
    assert signature(Lattice(((0, 0), (0, 0)))).as_tuple() == (0, 0, 2)


grams = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n).map(
        lambda xs: tuple(tuple(xs[i * n + j] + xs[j * n + i] for j in range(n)) for i in range(n))))


@settings(max_examples=100, deadline=None)
@given(grams)
def test_signature_matches_eigenvalues(g):
    assert signature(Lattice(g)).as_tuple() == oracles.signature(g)


@settings(max_examples=60, deadline=None)
@given(grams)
def test_discriminant_matches_snf_oracle(g):
    lat = Lattice(g)
    if lat.degenerate:
        return
    assert discriminant_data(lat).invariant_factors == oracles.invariant_factors(g)


def test_saturation_index():
    host = make("A1^2")
    basis, index = saturate(host, [(2, 0), (0, 3)])
    assert index == 6 and len(basis) == 2
    basis, index = saturate(host, [(2, 2)])
    assert index == 2 and basis == ((1, 1),)
    assert saturate(host, []) == ((), 1)


def test_complement_in_d4():
    d4 = make("D4")
    comp = orthogonal_complement(d4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    assert comp.rank == 2
    for b in comp.basis:
        assert d4.pair(b, (1, 0, 0, 0)) == 0 and d4.pair(b, (0, 0, 1, 0)) == 0
    assert invariants_equal(comp, make("A1^2")).equal


def test_complement_of_nothing_is_host():
    d4 = make("D4")
    assert orthogonal_complement(d4, []).gram == d4.gram


def test_isometry_order():
    u = make("U")
    assert is_isometry(u, ((0, 1), (1, 0))).order == 2
    assert is_isometry(u, ((-1, 0), (0, -1))).order == 2
    assert not is_isometry(u, ((1, 1), (0, 1))).is_isometry
    with pytest.raises(LatticeError):
        is_isometry(u, ((1,),))


def test_invariants_equal_verdicts():
    v = invariants_equal(make("U + A1^2 + E8^2"), make("U + A1^2 + E8^2"))
    assert v.equal and v.isometric
    assert not invariants_equal(make("U^2 + A1^8"), make("U(2)^2 + D8")).equal
    v = invariants_equal(make("E8"), make("E8"))
    assert v.equal and not v.isometric
    with pytest.raises(LatticeError):
        invariants_equal(Lattice(((1,),)), Lattice(((1,),)))


@pytest.mark.parametrize("expr, count", [("A1", 2), ("A1^2", 4), ("A2", 6), ("A3", 12),
                                         ("D4", 24), ("D5", 40)])
def test_root_counts_against_cube_oracle(expr, count):
    lat = make(expr)
    assert len(roots(lat)) == count
    assert oracles.count_vectors_of_norm(lat.gram, -2, 3) == count


def test_short_vectors_positive_definite():
    lat = Lattice(((2, 1), (1, 2)))
    sv = short_vectors(lat, 2)
    assert sorted(v for v, q in sv) == sorted([(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)])
    with pytest.raises(LatticeError):
        short_vectors(make("U"), 2)


def test_roots_sorted_and_negated():
    r = roots(make("D4"))
    assert r == sorted(r)
    assert set(r) == {tuple(-x for x in v) for v in r}


def test_json_roundtrip():
    lat = make("U(2) + D4")
    assert lattice_from_json(lattice_to_json(lat)).gram == lat.gram


def test_complement_basis_embeds():
    host = make("U + A1^2")
    comp = orthogonal_complement(host, [(1, 0, 0, 0)])
    gram = intmat.matmul(intmat.matmul(comp.basis, host.gram), intmat.transpose(comp.basis))
    assert gram == comp.gram
