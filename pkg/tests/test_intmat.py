from hypothesis import given, settings, strategies as st

from k3moduli import intmat

from oracles import invariant_factors

small = st.integers(-6, 6)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_is_a_factorization(m):
    u, d, v = intmat.smith_normal_form(m)
    assert intmat.matmul(intmat.matmul(u, m), v) == d
    assert abs(intmat.determinant(u)) == 1 and abs(intmat.determinant(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert tuple(x for x in nz if x > 1) == invariant_factors(m)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hnf_row_transform(m):
    h, u = intmat.hnf(m)
    assert intmat.matmul(u, m) == h
    assert abs(intmat.determinant(u)) == 1


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernels_annihilate(m):
    for k in intmat.right_kernel(m, len(m[0])):
        assert not any(intmat.matvec(m, k))
    for k in intmat.left_kernel(m):
        assert not any(intmat.matvec(intmat.transpose(m), k))


def test_kernel_dimension():
    m = ((1, 2, 3), (2, 4, 6))
    assert len(intmat.right_kernel(m, 3)) == 2
    assert len(intmat.left_kernel(m)) == 1


def test_determinant_and_inverse():
    m = ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert intmat.determinant(m) == 4
    inv = intmat.inverse(m)
    prod = [[sum(inv[i][k] * m[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[int(i == j) for j in range(3)] for i in range(3)]


def test_content():
    assert intmat.content((4, -6, 10)) == 2
    assert intmat.content((0, 0)) == 0
