"""The acceptance checks, runnable headless.

Each check returns a :class:`CheckResult`; results are cached so the test
suite and the ``verify`` command can share one run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import cover, intmat, kernels, octavic, quartic, strata
from .lattice import (
    Lattice,
    discriminant_data,
    direct_sum,
    is_isometry,
    orthogonal_complement,
    roots,
    signature,
)
from .named import (
    D4_F_BASIS,
    J2,
    L_MINUS,
    L_PLUS,
    box_bounds,
    d4_rho_block,
    fixed_lattice,
    isotropic_rho_vector_search,
    lattice_invariants,
    make,
    rho_on_L_minus,
)

__all__ = ["CheckResult", "VerifyReport", "CHECKS", "QUARTIC_CORPUS", "OCTAVIC_CORPUS",
           "run_check", "run_all", "random_unimodular"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    anchor: str
    passed: bool
    details: str

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.details}"

    def to_json(self):
        return {"number": self.number, "name": self.name, "anchor": self.anchor,
                "status": "pass" if self.passed else "fail", "details": self.details}


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _result(number, name, anchor, failures, ok_details):
    return CheckResult(number, name, anchor, not failures, "; ".join(failures) if failures else ok_details)


# ---------------------------------------------------------------------------
# lattice side

def check_table():
    fails = []
    rows = strata.full_table()
    keys = [(r.type.n, r.type.c) for r in rows]
    expected_keys = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (1, 2), (2, 1), (0, 1), (0, 2), (0, 3), (6, 0)]
    if sorted(keys) != sorted(expected_keys) or len(keys) != 11:
        fails.append(f"rows {keys}")
    for r in rows:
        rank, sig, _, ell, delta = lattice_invariants(str(r.picard_expr))
        want = strata.nikulin_invariants(r.type)
        if (rank, ell, delta) != want or sig != (1, rank - 1, 0):
            fails.append(f"row {r.type}: Gram gives rank {rank}, ell {ell}, delta {delta}, "
                         f"signature {sig}; formulas give {want}")
    return _result(1, "picard table", "table of Picard lattices", fails, f"{len(rows)} rows verified")


def check_rank_formulas():
    fails = []
    count = 0
    for n in range(0, 7):
        for c in range(0, 5):
            try:
                t = strata.SingularType(n, c)
                rho = strata.picard_rank(t)
            except strata.StrataError:
                continue
            rank, ell, _ = strata.nikulin_invariants(t)
            count += 1
            if rank != rho:
                fails.append(f"{t}: rank {rank} != {rho}")
            if rho + ell != 22 - 2 * (3 - n - c) or rho - ell != 2 * (n + 3 * c):
                fails.append(f"{t}: identities fail")
    return _result(2, "rank formulas", "Picard rank and ell identities", fails, f"{count} types")


def check_l_minus():
    fails = []
    lm = make(L_MINUS)
    dd = discriminant_data(lm)
    sig = signature(lm).as_tuple()
    if (lm.rank, sig, dd.ell, dd.delta) != (14, (2, 12, 0), 8, 1):
        fails.append(f"rank {lm.rank}, signature {sig}, ell {dd.ell}, delta {dd.delta}")
    lp = discriminant_data(make(L_PLUS))
    if lp.invariant_factors != dd.invariant_factors:
        fails.append(f"factors {dd.invariant_factors} vs {lp.invariant_factors}")
    return _result(3, "L- structure", "L- and L+ discriminant forms", fails,
                   "rank 14, signature (2,12), ell 8, delta 1, factors match L+")


def vinberg_transcendental():
    """Complement of U + A1^2 + E8^2 embedded in U^3 + E8^2, with A1 = <e - f> in two copies of U."""
    host = make("U^3 + E8^2")
    n = host.rank
    basis = []

    def unit(i):
        return tuple(int(k == i) for k in range(n))

    basis += [unit(0), unit(1)]
    for s in (2, 4):
        v = [0] * n
        v[s], v[s + 1] = 1, -1
        basis.append(tuple(v))
    basis += [unit(i) for i in range(6, n)]
    sub = host.restrict(basis)
    return sub, orthogonal_complement(host, basis)


def check_vinberg():
    fails = []
    inv = lattice_invariants("U + A1^2 + E8^2")
    if inv[0] != 20 or inv[3] != 2:
        fails.append(f"rank {inv[0]}, ell {inv[3]}")
    sub, comp = vinberg_transcendental()
    if lattice_invariants(sub.gram) != inv:
        fails.append("embedded sublattice is not U + A1^2 + E8^2")
    got = lattice_invariants(comp.gram)
    if got != lattice_invariants("<2>^2"):
        fails.append(f"transcendental invariants {got}")
    return _result(4, "four-line surface", "Vinberg's surface", fails,
                   "rank 20, ell 2, transcendental lattice has invariants of <2>^2")


def _coords_in(basis, v):
    inv = intmat.inverse(intmat.transpose(basis))
    return tuple(sum(inv[i][j] * v[j] for j in range(len(v))) for i in range(len(v)))


def check_rho():
    fails = []
    rho = rho_on_L_minus()
    ver = is_isometry(rho.host, rho.matrix)
    n = rho.host.rank
    if not ver.is_isometry or ver.order != 4:
        fails.append("not an order-4 isometry")
    neg = tuple(tuple(-int(i == j) for j in range(n)) for i in range(n))
    if intmat.matmul(rho.matrix, rho.matrix) != neg:
        fails.append("square is not -I")
    if fixed_lattice(rho.matrix):
        fails.append("nontrivial fixed lattice")
    want = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))   # J2 + J2
    assert want[:2] == tuple(r + (0, 0) for r in J2)
    for s in (2, 6, 10):
        block = tuple(tuple(rho.matrix[s + i][s + j] for j in range(4)) for i in range(4))
        if block != d4_rho_block():
            fails.append(f"block at {s} differs")
            continue
        fb = D4_F_BASIS
        m = tuple(tuple(int(c) for c in _coords_in(fb, intmat.matvec(block, b))) for b in fb)
        if m != want:
            fails.append(f"block at {s} acts as {m} on (f1, rho f1, f2, rho f2)")
    return _result(5, "rho action", "order-four isometry of L-", fails,
                   "isometry of order 4, rho^2 = -I, no fixed vectors, J2+J2 on each D4")


def check_root_counts():
    fails = []
    expected = {"A1": 2, "A1^2": 4, "D4": 24, "E6": 72, "E7": 126, "E8": 240, "D8": 112}
    for name, count in expected.items():
        lat = make(name)
        found = roots(lat)
        brute = kernels.box_search(lat.gram, box_bounds(lat, -2), -2)
        if len(found) != count or sorted(found) != sorted(brute):
            fails.append(f"{name}: roots {len(found)}, box search {len(brute)}, expected {count}")
    return _result(6, "root counts", "root systems", fails,
                   ", ".join(f"{k} {v}" for k, v in expected.items()))


def check_complement():
    d4 = make("D4")
    comp = orthogonal_complement(d4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    got = lattice_invariants(comp.gram)
    fails = [] if got == lattice_invariants("A1^2") else [f"complement invariants {got}"]
    return _result(7, "complement identity", "complement of <r, rho r> in D4", fails,
                   "complement has invariants of A1^2")


def check_isotropic():
    rho = rho_on_L_minus()
    x = isotropic_rho_vector_search(1)
    if x is None:
        fails = ["no vector found"]
    else:
        fails = [] if rho.host.norm(x) == 0 and rho.host.pair(x, rho.apply(x)) == 0 else [f"{x} fails"]
    return _result(8, "isotropic rho-plane", "isotropic lines over Z", fails, f"x = {x}")


# ---------------------------------------------------------------------------
# curves

# (text, class, minimal_orbit, orbit_limit, singular type or None)
QUARTIC_CORPUS = (
    ("x^4+y^4+z^4", "stable", None, None, (0, 0)),
    ("y^2*z^2-x^2*z^2+x^4+y^4", "stable", None, None, (1, 0)),
    ("y^2*z^2-x^3*z+y^4", "stable", None, None, (0, 1)),
    ("x^2*y^2+y^2*z^2+z^2*x^2", "stable", None, None, (3, 0)),
    ("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)", "stable", None, None, (0, 3)),
    ("x^4+y^4+z^4+2*x^2*z^2-y^2*z^2", "stable", None, None, (2, 0)),
    ("x*y*(x+y-z)*(x-y+2*z)", "stable", None, None, (6, 0)),
    ("y^2*z^2-x^4", "strictly_semistable", "two_tangent_conics", None, None),
    ("(y*z-x^2)*(y*z+x^2)", "strictly_semistable", "two_tangent_conics", None, None),
    ("(x^2+y^2-z^2)*(x^2+2*y^2-z^2)", "strictly_semistable", "two_tangent_conics", None, None),
    ("(x^2+y^2+z^2)^2", "strictly_semistable", "double_conic", "maps to v0", None),
    ("(y*z+x^2)^2+x*y^3", "strictly_semistable", "not_minimal", "maps to v0", None),
    ("x^3*y+y^4", "unstable", None, None, None),
    ("z*(y^2*z-x^3)", "unstable", None, None, None),
    ("x^2*y^2", "unstable", None, None, None),
)

OCTAVIC_CORPUS = (
    ("x^8+y^8", "stable", None, []),
    ("x^4*y^4", "strictly_semistable", octavic.TWO_QUADRUPLE_POINTS, ["tacnode", "tacnode"]),
    ("x^5*y^3", "unstable", None, ["cusp", "higher"]),
    ("x^2*(x-y)^2*(x+y)^2*y^2", "stable", None, ["node"] * 4),
)

INVARIANCE_TRIALS = 20


def random_unimodular(rng, n=3, steps=4):
    """Product of a few elementary matrices and a signed permutation."""
    m = [list(r) for r in intmat.identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-1, 1))
        for r in range(n):
            m[r][i] += k * m[r][j]
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    g = tuple(tuple(signs[c] * m[r][perm[c]] for c in range(n)) for r in range(n))
    assert abs(intmat.determinant(g)) == 1
    return g


def _quartic_key(v):
    return (v.stability, v.minimal_orbit, v.orbit_limit)


@lru_cache(maxsize=None)
def quartic_corpus_results(trials=INVARIANCE_TRIALS):
    out = []
    for text, cls, orbit, limit, typ in QUARTIC_CORPUS:
        f = quartic.parse_quartic(text)
        v = quartic.git_stability(f)
        t = quartic.singular_type(f, v) if v.stability == "stable" else None
        rng = random.Random(text)
        moved = []
        for _ in range(trials):
            g = random_unimodular(rng)
            fg = f.transform(g)
            vg = quartic.git_stability(fg)
            tg = quartic.singular_type(fg, vg) if vg.stability == "stable" else None
            moved.append((_quartic_key(vg), tg))
        out.append((text, (cls, orbit, limit), typ, v, t, tuple(moved)))
    return tuple(out)


def check_quartics():
    fails = []
    for text, want, typ, v, t, moved in quartic_corpus_results():
        got = _quartic_key(v)
        if got != want:
            fails.append(f"{text}: {got} != {want}")
        if typ is not None and (t is None or (t.n, t.c) != typ):
            fails.append(f"{text}: type {t} != {typ}")
        if want[0] == "strictly_semistable" and want[2] is None:
            if not any(w.type == "tacnode" and w.admissible for w in v.witnesses):
                fails.append(f"{text}: no admissible tacnode")
        if text.startswith("(y*z+x^2)^2"):
            if not any(w.type == "tacnode" and w.admissible is False for w in v.witnesses):
                fails.append(f"{text}: no inadmissible witness")
        bad = [m for m in moved if m != (got, t)]
        if bad:
            fails.append(f"{text}: {len(bad)} of {len(moved)} coordinate changes disagree")
    return _result(9, "quartic corpus", "stability of plane quartics", fails,
                   f"{len(QUARTIC_CORPUS)} curves x {INVARIANCE_TRIALS} coordinate changes")


def check_octavics():
    fails = []
    for text, cls, orbit, sing in OCTAVIC_CORPUS:
        v = octavic.octavic_stability(text)
        if (v.stability, v.minimal_orbit) != (cls, orbit):
            fails.append(f"{text}: {v.summary()}")
        got = octavic.cone_curve_singularities(text)
        if got != sorted(sing):
            fails.append(f"{text}: cone singularities {got}")
    prof = octavic.multiplicities("x^2*(x-y)^2*(x+y)^2*y^2").profile
    if prof != (2, 2, 2, 2):
        fails.append(f"profile {prof}")
    return _result(10, "octavic corpus", "stability of binary octavics", fails,
                   f"{len(OCTAVIC_CORPUS)} forms")


def check_gluing():
    fails = []
    vq = quartic.git_stability("y^2*z^2-x^4")
    rq = cover.cover_report_quartic(vq)
    ro = cover.cover_report_octavic(octavic.octavic_stability("x^4*y^4"))
    if rq.moduli_location != cover.BOUNDARY_CUSP or ro.moduli_location != cover.BOUNDARY_CUSP:
        fails.append(f"quartic -> {rq.moduli_location}, octavic -> {ro.moduli_location}")
    return _result(11, "gluing", "the boundary point b", fails,
                   "both tacnodal limits land on boundary_cusp")


CHECKS = (
    check_table,
    check_rank_formulas,
    check_l_minus,
    check_vinberg,
    check_rho,
    check_root_counts,
    check_complement,
    check_isotropic,
    check_quartics,
    check_octavics,
    check_gluing,
)


@lru_cache(maxsize=None)
def run_check(number: int) -> CheckResult:
    fn = CHECKS[number - 1]
    try:
        return fn()
    except Exception as exc:   # a crashing check is a failing check
        return CheckResult(number, fn.__name__.removeprefix("check_"), "", False,
                           f"{type(exc).__name__}: {exc}")


def run_all() -> VerifyReport:
    results = [run_check(i + 1) for i in range(len(CHECKS))]
    driver = _result(12, "headless driver", "all checks via verify",
                     [f"check {r.number} failed" for r in results if not r.passed],
                     f"{len(results)} checks passed")
    return VerifyReport(tuple(results) + (driver,))
