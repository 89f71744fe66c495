"""Picard lattices of the K3 surfaces attached to stable quartics of type (n, c).

The table below is stored as lattice expressions and re-verified from the
Gram matrices every time it is produced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import LatticeError
from .named import LatticeExpr, lattice_invariants, parse_expr

__all__ = [
    "StrataError",
    "NotTabulated",
    "SingularType",
    "StratumReport",
    "picard_rank",
    "nikulin_invariants",
    "picard_lattice",
    "expected_invariants",
    "anti_invariant_part",
    "stratum_report",
    "full_table",
    "TABLE",
]

K3_RANK = 22

# (n, c) -> Picard lattice of the generic K3 surface in the stratum
TABLE = {
    (0, 0): "<2> + A1^7",
    (1, 0): "U + A1^8",
    (2, 0): "U + A1^6 + D4",
    (3, 0): "U + A1^6 + D6",
    (1, 1): "U + A1^2 + D4 + D6",
    (1, 2): "U + A1^2 + D6 + E8",
    (2, 1): "U + A1^2 + D4 + D8",
    (0, 1): "U + A1^4 + D6",
    (0, 2): "U + A1^2 + D4 + E8",
    (0, 3): "U + A1^2 + E8^2",
    # four lines in general position (Vinberg's surface)
    (6, 0): "U + A1^2 + E8^2",
}


class StrataError(LatticeError):
    pass


class NotTabulated(StrataError):
    pass


@dataclass(frozen=True, order=True)
class SingularType:
    n: int
    c: int

    def __post_init__(self):
        if self.n < 0 or self.c < 0:
            raise StrataError("node and cusp counts must be nonnegative")
        if 3 - self.n - self.c < -3:
            raise StrataError("n + c exceeds 6")

    def __str__(self):
        return f"({self.n},{self.c})"


def _as_type(t) -> SingularType:
    return t if isinstance(t, SingularType) else SingularType(*t)


def picard_rank(t) -> int:
    t = _as_type(t)
    rho = 8 + 2 * t.n + 4 * t.c
    if rho > 20:
        raise StrataError(f"type {t} not realized by a K3 surface (rank {rho} > 20)")
    return rho


def nikulin_invariants(t):
    """``(rank, ell, delta)`` from the fixed-locus data of the covering involution.

    The fixed locus is a curve of genus ``g = 3 - n - c`` plus ``k = n + 3c``
    rational curves, so ``rank + ell = 22 - 2g`` and ``rank - ell = 2k``.
    """
    t = _as_type(t)
    if t.c > 4:
        raise StrataError("c > 4 gives negative ell")
    g = 3 - t.n - t.c
    k = t.n + 3 * t.c
    total, diff = K3_RANK - 2 * g, 2 * k
    rank, ell = (total + diff) // 2, (total - diff) // 2
    if rank != picard_rank(t):
        raise AssertionError("rank formulas disagree")
    if ell < 0:
        raise StrataError(f"type {t} gives negative ell")
    return rank, ell, 1


# The genus formula behind nikulin_invariants assumes an irreducible curve;
# four lines have a rational fixed curve instead, hence their own values.
REDUCIBLE_INVARIANTS = {(6, 0): (20, 2, 1)}


def expected_invariants(t):
    """``(rank, ell, delta)`` the tabulated Picard lattice of ``t`` must have."""
    t = _as_type(t)
    return REDUCIBLE_INVARIANTS.get((t.n, t.c)) or nikulin_invariants(t)


def picard_lattice(t) -> LatticeExpr:
    t = _as_type(t)
    key = (t.n, t.c)
    if key not in TABLE:
        raise NotTabulated(f"type {t} is not tabulated")
    expr = parse_expr(TABLE[key])
    rank, ell, delta = expected_invariants(t)
    inv = lattice_invariants(str(expr))
    if inv[0] != rank or inv[1] != (1, rank - 1, 0) or inv[3] != ell or inv[4] != delta:
        raise StrataError(f"table row {t}: {expr} has invariants {inv}, expected "
                          f"rank {rank}, ell {ell}, delta {delta}")
    return expr


def anti_invariant_part(t) -> LatticeExpr:
    """``A1^(2n) + D4^c``: the Picard classes orthogonal to L+."""
    t = _as_type(t)
    parts = []
    if t.n:
        parts.append(f"A1^{2 * t.n}")
    if t.c:
        parts.append(f"D4^{t.c}")
    return parse_expr(" + ".join(parts) if parts else "0")


@dataclass(frozen=True)
class StratumReport:
    type: SingularType
    picard_rank: int
    ell: int
    delta: int
    picard_expr: LatticeExpr | None
    anti_invariant_expr: LatticeExpr
    transcendental_rank: int

    def to_json(self):
        return {
            "n": self.type.n,
            "c": self.type.c,
            "rank": self.picard_rank,
            "ell": self.ell,
            "delta": self.delta,
            "picard": str(self.picard_expr) if self.picard_expr is not None else None,
            "anti_invariant": str(self.anti_invariant_expr),
        }


def stratum_report(t, require_table=True) -> StratumReport:
    """Report for one type; untabulated types get formulas only unless ``require_table``."""
    t = _as_type(t)
    rank, ell, delta = expected_invariants(t)
    try:
        expr = picard_lattice(t)
    except NotTabulated:
        if require_table:
            raise
        expr = None
    anti = anti_invariant_part(t)
    if rank - anti.rank != 8:
        raise AssertionError("anti-invariant rank mismatch")
    return StratumReport(t, rank, ell, delta, expr, anti, K3_RANK - rank)


def full_table():
    """All tabulated rows, each verified from its Gram matrix."""
    return [stratum_report(key) for key in TABLE]
