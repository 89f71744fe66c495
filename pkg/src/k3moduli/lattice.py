"""Integer lattices given by Gram matrices, and their invariants.

All arithmetic is exact (Python ints and Fractions).  Root lattices are
negative definite by default; see :mod:`k3moduli.named` for the catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, isqrt, prod
from typing import Optional, Sequence

from . import intmat
from .intmat import content, determinant, matmul, transpose

__all__ = [
    "LatticeError",
    "DegenerateLatticeError",
    "DeltaNotComputed",
    "Lattice",
    "Signature",
    "DiscriminantData",
    "IsometryVerdict",
    "InvariantsVerdict",
    "direct_sum",
    "rescale",
    "signature",
    "smith_normal_form",
    "discriminant_data",
    "orthogonal_complement",
    "saturate",
    "is_isometry",
    "invariants_equal",
    "roots",
    "short_vectors",
    "lattice_to_json",
    "lattice_from_json",
]

DELTA_ENUMERATION_CAP = 2 ** 16
ROOT_RANK_CAP = 24
ROOT_DET_CAP = 2 ** 30
ISOMETRY_ORDER_CAP = 64


class LatticeError(ValueError):
    pass


class DegenerateLatticeError(LatticeError):
    pass


class DeltaNotComputed(LatticeError):
    """Discriminant group too large to enumerate for the parity invariant."""


@dataclass(frozen=True)
class Lattice:
    gram: tuple
    label: Optional[str] = None
    # embedding into a host lattice, rows in host coordinates (if derived)
    basis: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        g = intmat.as_matrix(self.gram)
        if any(len(row) != len(g) for row in g):
            raise LatticeError("Gram matrix must be square")
        for i, row in enumerate(g):
            for j in range(i):
                if row[j] != g[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return determinant(self.gram)

    @property
    def degenerate(self) -> bool:
        return self.rank > 0 and self.det == 0

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def norm(self, v) -> int:
        return self.pair(v, v)

    def pair(self, u, v):
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)))

    def restrict(self, basis, label=None) -> "Lattice":
        """Sublattice spanned by ``basis`` (rows, in this lattice's coordinates)."""
        b = intmat.as_matrix(basis)
        if not b:
            return Lattice((), label)
        return Lattice(matmul(matmul(b, self.gram), transpose(b)), label)

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Lattice{name} rank={self.rank}>"


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int = 0

    def __add__(self, other):
        return Signature(self.positive + other.positive, self.negative + other.negative,
                         self.zero + other.zero)

    def as_tuple(self):
        return (self.positive, self.negative, self.zero)


@dataclass(frozen=True)
class DiscriminantData:
    invariant_factors: tuple
    generators: tuple
    form_values: tuple
    two_elementary: bool
    delta: Optional[int]

    @property
    def ell(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)


def _require_nondegenerate(a: Lattice):
    if a.degenerate:
        raise DegenerateLatticeError(f"{a!r} is degenerate")


def direct_sum(a: Lattice, b: Lattice, label=None) -> Lattice:
    n, m = a.rank, b.rank
    rows = [tuple(r) + (0,) * m for r in a.gram] + [(0,) * n + tuple(r) for r in b.gram]
    return Lattice(tuple(rows), label)


def rescale(a: Lattice, n: int, label=None) -> Lattice:
    if n == 0:
        raise LatticeError("rescale factor must be nonzero")
    return Lattice(tuple(tuple(n * x for x in row) for row in a.gram), label)


def signature(a: Lattice) -> Signature:
    """Sylvester counts by symmetric congruence diagonalization over Q."""
    g = [[Fraction(x) for x in row] for row in a.gram]
    n = len(g)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if g[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and g[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # x_i -> x_i + x_j makes the (i, i) entry 2 g_ij != 0
            for r in range(n):
                g[r][i] += g[r][j]
            for c in range(n):
                g[i][c] += g[j][c]
            k = i
        p = g[k][k]
        pos += p > 0
        neg += p < 0
        active.remove(k)
        for i in active:
            f = g[i][k] / p
            if f:
                for c in range(n):
                    g[i][c] -= f * g[k][c]
        for i in active:
            g[k][i] = g[i][k] = Fraction(0)
    return Signature(pos, neg, n - pos - neg)


def smith_normal_form(m):
    return intmat.smith_normal_form(m)


def discriminant_data(a: Lattice) -> DiscriminantData:
    """Invariant factors, dual-lattice generators and the parity invariant."""
    _require_nondegenerate(a)
    u, d, v = intmat.smith_normal_form(a.gram)
    n = a.rank
    factors, gens = [], []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            factors.append(di)
            gens.append(tuple(Fraction(v[r][i], di) for r in range(n)))
    values = tuple(_norm_mod2(a, gvec) for gvec in gens)
    two_el = all(x == 2 for x in factors)
    delta = None
    if two_el:
        order = 2 ** len(factors)
        if order > DELTA_ENUMERATION_CAP:
            raise DeltaNotComputed(f"|A_L| = {order} exceeds {DELTA_ENUMERATION_CAP}")
        delta = 0
        for coeffs in product(range(2), repeat=len(gens)):
            x = [sum((c * gv[r] for c, gv in zip(coeffs, gens)), Fraction(0)) for r in range(n)]
            if _norm_mod2(a, x).denominator != 1:
                delta = 1
                break
    return DiscriminantData(tuple(factors), tuple(gens), values, two_el, delta)


def _norm_mod2(a: Lattice, x) -> Fraction:
    return a.pair(x, x) % 2


def _span_basis(vectors, n):
    rows = [tuple(int(c) for c in v) for v in vectors]
    if not rows:
        return ()
    h, _ = intmat.hnf(rows)
    return tuple(r for r in h if any(r))


def saturate(host: Lattice, sub: Sequence) -> tuple:
    """Return ``(basis, index)`` for span_Q(sub) ∩ host and [saturation : <sub>]."""
    n = host.rank
    base = _span_basis(sub, n)
    if not base:
        return (), 1
    ann = intmat.right_kernel(base, n)
    if ann:
        sat = intmat.left_kernel(transpose(ann))
    else:
        sat = intmat.identity(n)
    sat, _ = intmat.hnf(sat)
    sat = tuple(r for r in sat if any(r))
    # coordinates of the sub basis in terms of the saturated basis
    k = len(sat)
    pivots = [next(j for j, x in enumerate(r) if x) for r in sat]
    coords = []
    for b in base:
        rem = list(b)
        c = []
        for r, pj in zip(sat, pivots):
            q = Fraction(rem[pj], r[pj])
            assert q.denominator == 1
            c.append(int(q))
            rem = [x - int(q) * y for x, y in zip(rem, r)]
        assert not any(rem)
        coords.append(c)
    assert len(coords) == k
    return sat, abs(determinant(coords))


def orthogonal_complement(host: Lattice, sub: Sequence, label=None) -> Lattice:
    """Complement of ``sub`` in ``host``; ``result.basis`` gives the embedding."""
    n = host.rank
    rows = [tuple(int(c) for c in v) for v in sub]
    if not rows:
        return Lattice(host.gram, label or host.label, intmat.identity(n))
    pairing = matmul(rows, host.gram)
    basis = intmat.right_kernel(pairing, n)
    basis, _ = intmat.hnf(basis) if basis else ((), None)
    basis = tuple(r for r in basis if any(r))
    return Lattice(host.restrict(basis).gram, label, basis)


@dataclass(frozen=True)
class IsometryVerdict:
    is_isometry: bool
    order: Optional[int]

    def __bool__(self):
        return self.is_isometry


def is_isometry(a: Lattice, j) -> IsometryVerdict:
    j = intmat.as_matrix(j)
    if len(j) != a.rank or any(len(r) != a.rank for r in j):
        raise LatticeError("isometry size does not match lattice rank")
    if matmul(matmul(transpose(j), a.gram), j) != a.gram:
        return IsometryVerdict(False, None)
    ident = intmat.identity(a.rank)
    power = j
    for k in range(1, ISOMETRY_ORDER_CAP + 1):
        if power == ident:
            return IsometryVerdict(True, k)
        power = matmul(power, j)
    return IsometryVerdict(True, None)


@dataclass(frozen=True)
class InvariantsVerdict:
    equal: bool
    isometric: bool
    message: str

    def __bool__(self):
        return self.equal


def invariants_equal(a: Lattice, b: Lattice) -> InvariantsVerdict:
    """Compare rank, signature, invariant factors and (2-elementary) parity.

    Agreement certifies an isometry only for even indefinite 2-elementary
    lattices, where the triple (rank, ell, delta) with the signature
    determines the class.
    """
    _require_nondegenerate(a)
    _require_nondegenerate(b)
    if not (a.even and b.even):
        raise LatticeError("invariants_equal needs even lattices")
    if a.rank != b.rank:
        return InvariantsVerdict(False, False, "ranks differ")
    sa, sb = signature(a), signature(b)
    if sa != sb:
        return InvariantsVerdict(False, False, "signatures differ")
    da, db = discriminant_data(a), discriminant_data(b)
    if da.invariant_factors != db.invariant_factors:
        return InvariantsVerdict(False, False, "invariant factors differ")
    if da.two_elementary and da.delta != db.delta:
        return InvariantsVerdict(False, False, "parity invariant delta differs")
    indefinite = sa.positive > 0 and sa.negative > 0
    if da.two_elementary and indefinite:
        return InvariantsVerdict(True, True, "isometric (2-elementary indefinite)")
    return InvariantsVerdict(True, False, "invariants agree (isometry not certified)")


def _ldl(p):
    """Exact ``q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`` for positive definite ``p``."""
    n = len(p)
    a = [[Fraction(x) for x in row] for row in p]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise LatticeError("form is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= mu[i][j] * a[i][k]
    return d, mu


def _int_range(center: Fraction, radius_sq: Fraction):
    """Integers t with (t - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    r = isqrt(radius_sq.numerator // radius_sq.denominator) + 1
    lo = floor(center) - r
    hi = floor(center) + r + 1
    while lo < hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi > lo and (hi - 1 - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi)


def short_vectors(a: Lattice, bound):
    """All nonzero x with 0 < |x^T G x| <= bound in a definite lattice, paired with |q(x)|.

    Branch-and-bound over the exact rational LDL^T decomposition, last
    coordinate outermost.
    """
    _require_nondegenerate(a)
    n = a.rank
    sig = signature(a)
    if sig.negative == n:
        p = tuple(tuple(-x for x in row) for row in a.gram)
    elif sig.positive == n:
        p = a.gram
    else:
        raise LatticeError("short vector enumeration needs a definite lattice")
    d, mu = _ldl(p)
    bound = Fraction(bound)
    out = []
    x = [0] * n

    def rec(i, remaining):
        if i < 0:
            if any(x):
                out.append((tuple(x), bound - remaining))
            return
        center = -sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for t in _int_range(center, remaining / d[i]):
            x[i] = t
            rec(i - 1, remaining - d[i] * (t - center) ** 2)
        x[i] = 0

    rec(n - 1, bound)
    return out


def roots(a: Lattice):
    """Sorted list of all v with v^T G v = -2 (positive definite input: +2)."""
    if a.rank > ROOT_RANK_CAP:
        raise LatticeError(f"root enumeration capped at rank {ROOT_RANK_CAP}")
    if a.rank and abs(a.det) > ROOT_DET_CAP:
        raise LatticeError("root enumeration capped at |det| <= 2^30")
    return sorted(v for v, q in short_vectors(a, 2) if q == 2)


def lattice_to_json(a: Lattice) -> str:
    obj = {"gram": [[str(x) for x in row] for row in a.gram]}
    if a.label is not None:
        obj["label"] = a.label
    return json.dumps(obj, sort_keys=True)


def lattice_from_json(text) -> Lattice:
    obj = json.loads(text) if isinstance(text, str) else text
    gram = tuple(tuple(int(x) for x in row) for row in obj["gram"])
    return Lattice(gram, obj.get("label"))


def primitive(v) -> bool:
    return content(v) == 1
