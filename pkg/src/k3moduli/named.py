"""Catalog of named lattices, the order-four isometry on L-, and root classes.

Atoms use fixed bases:

* ``A_n``: simple roots ``e_i - e_{i+1}``;
* ``D_n``: ``e_1 - e_2, ..., e_{n-1} - e_n, e_{n-1} + e_n``;
* ``E_6, E_7, E_8``: Bourbaki numbering (node 2 hangs off node 4);
* ``U = [[0, 1], [1, 0]]``, ``U(2) = 2U``, ``<n> = (n)``.

Root lattices are negative definite (diagonal -2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import intmat, kernels
from .lattice import (
    Lattice,
    LatticeError,
    direct_sum,
    discriminant_data,
    orthogonal_complement,
    saturate,
    signature,
)

__all__ = [
    "ExprError",
    "LatticeExpr",
    "parse_expr",
    "make",
    "L_PLUS",
    "L_MINUS",
    "RhoAction",
    "rho_on_L_minus",
    "d4_rho_block",
    "classify_root",
    "lattice_invariants",
    "isotropic_rho_vector_search",
    "box_bounds",
]

L_PLUS = "<2> + A1^7"
L_MINUS = "<2>^2 + D4^3"


class ExprError(LatticeError):
    def __init__(self, message, position=None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


def _cartan_type_a(n):
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


def _cartan_from_edges(n, edges):
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return m


def _cartan_type_d(n):
    # path 1-2-...-(n-1) plus node n attached to n-2
    edges = [(i, i + 1) for i in range(n - 2)]
    if n >= 3:
        edges.append((n - 3, n - 1))
    return _cartan_from_edges(n, edges)


def _cartan_type_e(n):
    # Bourbaki: 1-3-4-5-6-7-8 and 2-4
    edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    return _cartan_from_edges(n, edges)


def _atom_gram(name, arg):
    if name == "U":
        return ((0, arg), (arg, 0))
    if name == "<>":
        return ((arg,),)
    if name == "A":
        if arg < 1:
            raise ExprError("A_n needs n >= 1")
        cart = _cartan_type_a(arg)
    elif name == "D":
        if arg < 2:
            raise ExprError("D_n needs n >= 2")
        cart = _cartan_type_d(arg)
    elif name == "E":
        if arg not in (6, 7, 8):
            raise ExprError("only E6, E7, E8 exist")
        cart = _cartan_type_e(arg)
    else:
        raise ExprError(f"unknown atom {name!r}")
    return tuple(tuple(-x for x in row) for row in cart)


@dataclass(frozen=True)
class Atom:
    kind: str   # "U", "<>", "A", "D", "E"
    arg: int    # twist for U, value for <>, index for ADE

    def __str__(self):
        if self.kind == "U":
            return "U" if self.arg == 1 else f"U({self.arg})"
        if self.kind == "<>":
            return f"<{self.arg}>"
        return f"{self.kind}{self.arg}"

    def gram(self):
        return _atom_gram(self.kind, self.arg)


@dataclass(frozen=True)
class LatticeExpr:
    """Formal direct sum of named atoms with multiplicities, in written order."""

    terms: tuple = ()

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(a) if k == 1 else f"{a}^{k}" for a, k in self.terms)

    def __add__(self, other):
        return LatticeExpr(self.terms + other.terms)

    @property
    def rank(self):
        return sum(len(a.gram()) * k for a, k in self.terms)


_TOKEN = re.compile(r"\s*(?:(U\(\s*(\d+)\s*\))|(U)|<\s*(-?\d+)\s*>|([ADE])(\d+)|(\^)\s*(\d+)|(\+)|(0))")


def parse_expr(text: str) -> LatticeExpr:
    """Parse ``U + A1^8``, ``<2>^2 + D4^3``, ``U(2)^2 + D8``; ``0`` is the empty sum."""
    pos = 0
    terms = []
    expect_atom = True
    text = text.rstrip()
    if text.strip() == "0":
        return LatticeExpr()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            while text[pos].isspace():
                pos += 1
            raise ExprError(f"unexpected character {text[pos:pos + 1]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if expect_atom:
            if m.group(1):
                atom = Atom("U", int(m.group(2)))
                if atom.arg < 1:
                    raise ExprError("U(n) needs n >= 1", start)
            elif m.group(3):
                atom = Atom("U", 1)
            elif m.group(4):
                v = int(m.group(4))
                if v == 0 or v % 2:
                    raise ExprError("<n> needs a nonzero even n", start)
                atom = Atom("<>", v)
            elif m.group(5):
                atom = Atom(m.group(5), int(m.group(6)))
                try:
                    atom.gram()
                except ExprError as exc:
                    raise ExprError(str(exc), start) from None
            else:
                raise ExprError("expected a lattice atom", start)
            terms.append([atom, 1])
            expect_atom = False
        else:
            if m.group(7):
                k = int(m.group(8))
                if k < 1:
                    raise ExprError("exponent must be positive", start)
                terms[-1][1] *= k
            elif m.group(9):
                expect_atom = True
            else:
                raise ExprError("expected '+' or '^'", start)
        pos = m.end()
    if expect_atom:
        raise ExprError("expression ends early", len(text))
    return LatticeExpr(tuple((a, k) for a, k in terms))


def make(expr) -> Lattice:
    """Gram matrix of a lattice expression (string or :class:`LatticeExpr`)."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    out = Lattice(())
    for atom, k in expr.terms:
        block = Lattice(atom.gram())
        for _ in range(k):
            out = direct_sum(out, block)
    return Lattice(out.gram, str(expr))


@lru_cache(maxsize=None)
def lattice_invariants(expr_or_gram):
    """``(rank, signature tuple, invariant factors, ell, delta)`` for a cached key."""
    lat = make(expr_or_gram) if isinstance(expr_or_gram, str) else Lattice(expr_or_gram)
    return _invariants(lat)


def _invariants(lat: Lattice):
    dd = discriminant_data(lat)
    return (lat.rank, signature(lat).as_tuple(), dd.invariant_factors, dd.ell, dd.delta)


# ---------------------------------------------------------------------------
# the isometry rho on L- = <2>^2 + D4^3

J2 = ((0, 1), (-1, 0))

# Z[i]-basis of D4 in root coordinates (e1-e2, e2-e3, e3-e4, e3+e4):
# f1 = e1-e2, rho f1 = e3-e4, f2 = e1-e3, rho f2 = e1+e3
D4_F_BASIS = ((1, 0, 0, 0), (0, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 1))


def _column_matrix_in_f_basis():
    # rho(b1) = b2, rho(b2) = -b1 on each pair; column k holds rho(b_k).
    # Its transpose, the matrix acting on row coordinates, is J2 + J2.
    m = [[0] * 4 for _ in range(4)]
    for s in (0, 2):
        m[s + 1][s] = 1
        m[s][s + 1] = -1
    return tuple(map(tuple, m))


def d4_rho_block():
    """rho on one D4 block, in root coordinates (acts on column vectors)."""
    p = intmat.transpose(D4_F_BASIS)          # columns are f-vectors in root coords
    j = _column_matrix_in_f_basis()
    pinv = intmat.inverse(p)
    m = [[sum(Fraction(p[i][a]) * j[a][b] * pinv[b][c] for a in range(4) for b in range(4))
          for c in range(4)] for i in range(4)]
    if any(x.denominator != 1 for row in m for x in row):
        raise AssertionError("rho block is not integral")
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True)
class RhoAction:
    host: Lattice
    matrix: tuple
    order: int

    def apply(self, v):
        return intmat.matvec(self.matrix, v)


@lru_cache(maxsize=None)
def rho_on_L_minus() -> RhoAction:
    host = make(L_MINUS)
    n = host.rank
    m = [[0] * n for _ in range(n)]
    m[1][0] = 1
    m[0][1] = -1
    block = d4_rho_block()
    for s in (2, 6, 10):
        for i in range(4):
            for j in range(4):
                m[s + i][s + j] = block[i][j]
    matrix = tuple(map(tuple, m))

    from .lattice import is_isometry

    verdict = is_isometry(host, matrix)
    if not verdict.is_isometry or verdict.order != 4:
        raise AssertionError("rho is not an order-4 isometry of L-")
    neg = tuple(tuple(-x for x in row) for row in intmat.identity(n))
    if intmat.matmul(matrix, matrix) != neg:
        raise AssertionError("rho^2 != -I")
    if fixed_lattice(matrix):
        raise AssertionError("rho has nonzero fixed vectors")
    return RhoAction(host, matrix, 4)


def fixed_lattice(matrix):
    n = len(matrix)
    diff = tuple(tuple(matrix[i][j] - (i == j) for j in range(n)) for i in range(n))
    return intmat.right_kernel(diff, n)


NODE_CLASS = "node_class"
HYPERELLIPTIC_CLASS = "hyperelliptic_class"
NODE_MODEL = "U^2 + A1^8"
HYPERELLIPTIC_MODEL = "U(2)^2 + D8"


def classify_root(r):
    """Decide whether the complement of <r, rho r> looks like U^2+A1^8 or U(2)^2+D8."""
    rho = rho_on_L_minus()
    host = rho.host
    r = tuple(int(x) for x in r)
    if len(r) != host.rank:
        raise LatticeError("root has wrong length")
    if host.norm(r) != -2:
        raise LatticeError(f"not a root: r^2 = {host.norm(r)}")
    lam, _ = saturate(host, [r, rho.apply(r)])
    comp = orthogonal_complement(host, lam)
    inv = _invariants(comp)
    if inv == lattice_invariants(NODE_MODEL):
        return NODE_CLASS
    if inv == lattice_invariants(HYPERELLIPTIC_MODEL):
        return HYPERELLIPTIC_CLASS
    raise LatticeError(f"complement invariants {inv} match neither root class")


def box_bounds(lat: Lattice, norm: int):
    """Per-coordinate bounds for vectors of ``|x^T G x| <= |norm|`` in a definite lattice.

    Cauchy-Schwarz: ``x_i^2 <= q(x) * (G^-1)_ii`` for the positive definite sign.
    """
    sig = signature(lat)
    sign = 1 if sig.positive == lat.rank else -1 if sig.negative == lat.rank else 0
    if sign == 0:
        raise LatticeError("box bounds need a definite lattice")
    inv = intmat.inverse(lat.gram)
    out = []
    for i in range(lat.rank):
        s = abs(norm) * sign * inv[i][i]
        b = isqrt(s.numerator // s.denominator)
        out.append(b)
    return out


def isotropic_rho_vector_search(bound: int, backend=None):
    """Some primitive ``x`` in L- with ``x^2 = 0`` and ``(x, rho x) = 0``, or ``None``."""
    if bound < 1:
        return None
    rho = rho_on_L_minus()
    g = rho.host.gram
    # (x, rho x) = x^T G R x; only the symmetric part matters
    gr = intmat.matmul(g, rho.matrix)
    sym2 = tuple(tuple(gr[i][j] + gr[j][i] for j in range(len(g))) for i in range(len(g)))
    for x in kernels.box_search(g, bound, 0, gram2=sym2, target2=0, max_hits=64, backend=backend):
        if intmat.content(x) == 1:
            assert rho.host.norm(x) == 0 and rho.host.pair(x, rho.apply(x)) == 0
            return x
    return None
