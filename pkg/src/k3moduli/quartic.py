"""Singularities and GIT stability of plane quartics, in exact arithmetic.

Singular points are found by elimination: after a coordinate change that
keeps the line ``z = 0`` free of singular points, the x-coordinates of the
singular points in the chart ``z = 1`` are the roots of a gcd of resultants
of the partials.  Each irreducible factor ``m`` of that gcd gives a residue
field ``Q[t]/(m)`` in which the y-coordinate is recovered by a gcd.
Conjugate points are therefore reported once, with their field degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

import sympy

from . import intmat
from .poly import (
    QQ_FIELD,
    NFElement,
    NumberField,
    format_polynomial,
    from_sympy,
    homogeneous_degree,
    parse_polynomial,
    poly_add,
    poly_mul,
    poly_pow,
    poly_scale,
    to_sympy,
    upoly_gcd,
    _upoly_divmod,
)
from .stability import (
    DOUBLE_CONIC,
    NOT_MINIMAL,
    ORBIT_LIMIT_V0,
    STABLE,
    STRICTLY_SEMISTABLE,
    TWO_TANGENT_CONICS,
    UNSTABLE,
    StabilityVerdict,
)
from .strata import SingularType

__all__ = [
    "QuarticError",
    "NonReducedError",
    "FieldDegreeError",
    "SingularityError",
    "QuarticForm",
    "LocalModel",
    "SingularityReport",
    "DoubleConic",
    "parse_quartic",
    "is_double_conic",
    "singular_points",
    "classify_singularity",
    "git_stability",
    "singular_type",
    "coordinate_changes",
]

X, Y, Z = sympy.symbols("x y z")
GENS = (X, Y, Z)
VARS = ("x", "y", "z")
MAX_FIELD_DEGREE = 12
CHANGE_SEED = 1729
MAX_CHANGES = 64

NODE, CUSP, TACNODE = "node", "cusp", "tacnode"
HIGHER_A, TRIPLE, NON_ISOLATED = "higher_A", "triple_or_worse", "non_isolated"


class QuarticError(ValueError):
    pass


class NonReducedError(QuarticError):
    pass


class FieldDegreeError(QuarticError):
    pass


class SingularityError(QuarticError):
    pass


# ---------------------------------------------------------------------------
# forms

@dataclass(frozen=True)
class QuarticForm:
    coefficients: tuple  # sorted ((i, j, k), Fraction) with nonzero values

    @classmethod
    def from_dict(cls, d):
        d = {tuple(m): Fraction(c) for m, c in d.items() if c != 0}
        if not d:
            raise QuarticError("zero form")
        deg = homogeneous_degree(d)
        if deg is None:
            raise QuarticError("form is not homogeneous")
        if deg != 4:
            raise QuarticError(f"form has degree {deg}, expected 4")
        return cls(tuple(sorted(d.items(), reverse=True)))

    def as_dict(self):
        return dict(self.coefficients)

    def __str__(self):
        return format_polynomial(self.as_dict(), VARS)

    @cached_property
    def poly(self):
        return to_sympy(self.as_dict(), GENS)

    def transform(self, g):
        """``f o g``: substitute ``(x, y, z) -> g (x, y, z)``."""
        return QuarticForm.from_dict(substitute_linear(self.as_dict(), g))

    def evaluate(self, point):
        total = 0
        for (i, j, k), c in self.coefficients:
            total = total + c * point[0] ** i * point[1] ** j * point[2] ** k
        return total


def substitute_linear(d, g):
    """Substitute ``x_i -> sum_j g[i][j] x_j`` in a ternary dict polynomial."""
    images = [{tuple(int(i == j) for i in range(3)): Fraction(row[j]) for j in range(3) if row[j]}
              for row in g]
    powers = [{} for _ in range(3)]
    out = {}
    for m, c in d.items():
        term = {(0, 0, 0): c}
        for v, e in enumerate(m):
            if e:
                if e not in powers[v]:
                    powers[v][e] = poly_pow(images[v], e, 3)
                term = poly_mul(term, powers[v][e])
        out = poly_add(out, term)
    return out


def parse_quartic(text: str) -> QuarticForm:
    p = parse_polynomial(text, VARS)
    if not p:
        raise QuarticError("zero form")
    return QuarticForm.from_dict(p)


def _as_form(f):
    return parse_quartic(f) if isinstance(f, str) else f


# ---------------------------------------------------------------------------
# points and local models

def _elt(field_, v):
    return v if isinstance(v, NFElement) else NFElement(field_, (v,))


@dataclass(frozen=True)
class LocalModel:
    """A point of P^2 over ``field``, with the curve's equation centred there.

    ``local_expansion`` maps exponent pairs of the two affine coordinates of
    the chart ``x_chart = 1`` to coefficients in ``field``.
    """

    field: NumberField
    center: tuple
    chart: int
    local_expansion: tuple = ()
    change: tuple | None = None

    @property
    def degree(self):
        return self.field.degree

    def expansion(self):
        return dict(self.local_expansion)

    def sort_key(self):
        return (self.degree, self.field.modulus, tuple(tuple(c.coeffs) for c in self.center))

    def to_json(self):
        out = {
            "field": "QQ" if self.degree == 1 else f"QQ[t]/({self.field.modulus_str()})",
            "degree": self.degree,
            "center": [str(c) for c in self.center],
        }
        if self.change is not None:
            out["coordinate_change"] = [list(r) for r in self.change]
        return out

    def __str__(self):
        pt = "(" + " : ".join(str(c) for c in self.center) + ")"
        return pt if self.degree == 1 else f"{pt} over {self.field!r}"


def _normalize_point(field_, coords):
    coords = [_elt(field_, c) for c in coords]
    last = max(i for i, c in enumerate(coords) if c)
    inv = coords[last].inverse()
    return tuple(c * inv for c in coords), last


def local_model(form: QuarticForm, field_, coords, change=None) -> LocalModel:
    center, chart = _normalize_point(field_, coords)
    a, b = [i for i in range(3) if i != chart]
    one = NFElement(field_, (1,))
    pow_a = {}
    pow_b = {}
    out = {}
    for m, c in form.coefficients:
        ea, eb = m[a], m[b]
        if ea not in pow_a:
            pow_a[ea] = _binomial(center[a], ea)
        if eb not in pow_b:
            pow_b[eb] = _binomial(center[b], eb)
        for i, ca in enumerate(pow_a[ea]):
            if not ca:
                continue
            for j, cb in enumerate(pow_b[eb]):
                if cb:
                    out[(i, j)] = out.get((i, j), 0 * one) + ca * cb * c
    expansion = tuple(sorted((k, v) for k, v in out.items() if v))
    return LocalModel(field_, center, chart, expansion, change)


def _binomial(a, k):
    return [comb(k, i) * a ** (k - i) for i in range(k + 1)]


# ---------------------------------------------------------------------------
# elimination

def coordinate_changes(seed=CHANGE_SEED, count=MAX_CHANGES):
    """Identity, then seeded random invertible integer 3x3 matrices."""
    yield intmat.identity(3)
    rng = random.Random(seed)
    made = 0
    while made < count:
        g = tuple(tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(3))
        if intmat.determinant(g) != 0:
            made += 1
            yield g


def is_reduced(form: QuarticForm) -> bool:
    p = form.poly
    g = p
    for v in GENS:
        g = sympy.gcd(g, p.diff(v))
    return g.total_degree() == 0


def _chart_candidates(fg: QuarticForm):
    """Singular points of ``fg`` with ``z != 0``; ``None`` if this chart is unsuitable."""
    p = fg.poly
    partials = [p.diff(v) for v in GENS]
    # singular points on z = 0: common zeros of the partials restricted there
    pdicts = [from_sympy(q) for q in partials]
    at_inf = [_poly2({(m[0], m[1]): c for m, c in d.items() if m[2] == 0}, (X, Y)) for d in pdicts]
    g = sympy.Poly(0, X, Y, domain=sympy.QQ)
    for q in at_inf:
        g = sympy.gcd(g, q)
    if g.is_zero or g.total_degree() > 0:
        return None

    affine = []
    for d in pdicts:
        a = {}
        for m, c in d.items():
            a[(m[1], m[0])] = a.get((m[1], m[0]), 0) + c
        a = {k: v for k, v in a.items() if v}
        if a:
            affine.append(_poly2(a, (Y, X)))
    pieces = []
    for q in affine:
        if q.degree(Y) == 0:
            pieces.append(sympy.Poly(q.as_expr(), X, domain=sympy.QQ))
    for i in range(len(affine)):
        for j in range(i + 1, len(affine)):
            a, b = affine[i], affine[j]
            if a.degree(Y) > 0 and b.degree(Y) > 0:
                r = a.resultant(b).set_domain(sympy.QQ)
                if not r.is_zero:
                    pieces.append(r)
    if not pieces:
        return None
    res = pieces[0]
    for q in pieces[1:]:
        res = sympy.gcd(res, q)
    if res.degree() <= 0:
        return []

    biv = [{(m[1], m[0]): Fraction(int(c.numerator), int(c.denominator))
            for m, c in q.terms()} for q in affine]   # keys (deg x, deg y)
    points = []
    _, factors = res.factor_list()
    for m, _e in factors:
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(m.all_coeffs())]
        d = len(coeffs) - 1
        if d > MAX_FIELD_DEGREE:
            raise FieldDegreeError(f"singular point needs a field of degree {d} > {MAX_FIELD_DEGREE}")
        if d == 1:
            field_ = QQ_FIELD
            x0 = NFElement(field_, (-coeffs[0] / coeffs[1],))
        else:
            field_ = NumberField(coeffs)
            x0 = field_.gen
        gcd = None
        for q in biv:
            uni = _specialize_x(q, x0, field_)
            gcd = uni if gcd is None else upoly_gcd(gcd, uni)
        gcd = _squarefree(upoly_gcd(gcd, []))
        if len(gcd) <= 1:
            continue
        if len(gcd) > 2:
            return None   # two singular points over one x: try another chart
        y0 = -gcd[0] / gcd[1]
        points.append((field_, (x0, y0, NFElement(field_, (1,)))))
    return points


def _poly2(d, gens):
    return sympy.Poly.from_dict({m: sympy.Rational(c.numerator, c.denominator) for m, c in d.items()},
                                *gens, domain=sympy.QQ)


def _squarefree(a):
    if len(a) <= 2:
        return a
    da = [i * c for i, c in enumerate(a)][1:]
    g = upoly_gcd(a, da)
    if len(g) <= 1:
        return a
    return upoly_gcd(_upoly_quotient(a, g), [])


def _upoly_quotient(a, b):
    q, r = _upoly_divmod(a, b)
    if r:
        raise AssertionError("inexact polynomial division")
    return q


def _specialize_x(q, x0, field_):
    deg_y = max(j for _, j in q)
    out = [NFElement(field_, ()) for _ in range(deg_y + 1)]
    for (i, j), c in q.items():
        out[j] = out[j] + c * x0 ** i
    return out


def singular_points(f) -> list:
    """All singular points of a reduced quartic, one entry per Galois orbit."""
    form = _as_form(f)
    if not is_reduced(form):
        raise NonReducedError("quartic is not reduced")
    for g in coordinate_changes():
        fg = form.transform(g)
        found = _chart_candidates(fg)
        if found is None:
            continue
        out = []
        for field_, coords in found:
            orig = [sum((g[i][j] * coords[j] for j in range(3)), NFElement(field_, ())) for i in range(3)]
            change = None if g == intmat.identity(3) else g
            out.append(local_model(form, field_, orig, change))
        out.sort(key=LocalModel.sort_key)
        return out
    raise QuarticError("no suitable coordinate change found")


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class SingularityReport:
    point: LocalModel
    multiplicity: int
    type: str
    admissible: bool | None = None
    normal_form: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.type in (NODE, CUSP, TACNODE) and self.multiplicity != 2:
            raise AssertionError("A-type singularity with multiplicity != 2")
        if self.type == TRIPLE and self.multiplicity < 3:
            raise AssertionError("triple point with multiplicity < 3")

    @property
    def degree(self):
        return self.point.degree

    def to_json(self):
        out = {
            "point": self.point.to_json(),
            "multiplicity": self.multiplicity,
            "type": self.type,
            "admissible": self.admissible,
        }
        if self.normal_form:
            out["normal_form"] = {k: str(v) for k, v in self.normal_form}
        return out


def _substitute_shear(f, k):
    """``f(U, V + k U)`` for a dict in (u, v)."""
    out = {}
    for (i, j), c in f.items():
        for l in range(j + 1):
            coef = c * comb(j, l) * k ** (j - l)
            if coef:
                key = (i + j - l, l)
                out[key] = out.get(key, 0) + coef
    return {m: c for m, c in out.items() if c}


def _lowest_degree(f):
    return min(i + j for i, j in f) if f else None


def classify_singularity(f, p: LocalModel) -> SingularityReport:
    form = _as_form(f)
    if p.field.degree > MAX_FIELD_DEGREE:
        raise FieldDegreeError("field degree overflow")
    model = local_model(form, p.field, p.center, p.change)
    loc = model.expansion()
    if not loc:
        raise SingularityError("curve vanishes identically near the point")
    mu = _lowest_degree(loc)
    if mu == 0:
        raise SingularityError(f"point {model} is not on the curve")
    if mu == 1:
        raise SingularityError(f"point {model} is a smooth point")
    if mu >= 3:
        return SingularityReport(model, mu, TRIPLE)
    if _on_repeated_component(form, model):
        return SingularityReport(model, mu, NON_ISOLATED)

    zero = NFElement(model.field, ())
    a = loc.get((2, 0), zero)
    b = loc.get((1, 1), zero)
    c = loc.get((0, 2), zero)
    if b * b - 4 * a * c:
        return SingularityReport(model, 2, NODE, normal_form=(("discriminant", b * b - 4 * a * c),))

    # double tangent line: move it to v = 0
    if c:
        g = _substitute_shear(loc, -b / (2 * c))
    else:
        g = {(j, i): v for (i, j), v in loc.items()}
    a02 = g[(0, 2)]
    g = {m: v / a02 for m, v in g.items()}
    a30 = g.get((3, 0), zero)
    if a30:
        return SingularityReport(model, 2, CUSP, normal_form=(("a30", a30),))
    a21 = g.get((2, 1), zero)
    a40 = g.get((4, 0), zero)
    nf = (("a21", a21), ("a40", a40))
    if not a21 and not a40:
        return SingularityReport(model, 2, HIGHER_A, admissible=False, normal_form=nf)
    disc = a21 * a21 - 4 * a40
    if disc:
        return SingularityReport(model, 2, TACNODE, admissible=True, normal_form=nf)
    return SingularityReport(model, 2, TACNODE, admissible=False,
                             normal_form=nf + (("alpha", a21 / 2),))


@lru_cache(maxsize=256)
def _repeated_part(form: QuarticForm):
    _, factors = form.poly.factor_list()
    return tuple(h for h, e in factors if e >= 2)


def _on_repeated_component(form, model):
    for h in _repeated_part(form):
        val = 0
        for m, c in from_sympy(h).items():
            val = val + c * model.center[0] ** m[0] * model.center[1] ** m[1] * model.center[2] ** m[2]
        if not val:
            return True
    return False


# ---------------------------------------------------------------------------
# double conics and non-reduced forms

@dataclass(frozen=True)
class DoubleConic:
    q: tuple          # sorted ((i, j, k), Fraction), primitive integral, leading coefficient > 0
    rank: int
    scalar: Fraction  # f = scalar * q^2

    def __str__(self):
        return format_polynomial(dict(self.q), VARS)


def _quadric_matrix(q):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for mono, c in q.items():
        idx = [i for i in range(3) for _ in range(mono[i])]
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def _quadric_rank(q):
    return sympy.Matrix(_quadric_matrix(q)).rank()


def _primitive(d):
    from math import lcm, gcd
    den = lcm(*[c.denominator for c in d.values()])
    ints = {m: int(c * den) for m, c in d.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[max(ints)]
    s = 1 if lead > 0 else -1
    return {m: Fraction(s * v, g) for m, v in ints.items()}


def is_double_conic(f):
    """``DoubleConic`` if ``f = c * q^2`` for a quadratic form ``q`` over Q, else ``None``."""
    form = _as_form(f)
    coeff, parts = form.poly.sqf_list()
    if not parts or any(e % 2 for _, e in parts):
        return None
    q = sympy.Poly(1, *GENS, domain=sympy.QQ)
    for h, e in parts:
        q = q * h ** (e // 2)
    qd = _primitive(from_sympy(q))
    if homogeneous_degree(qd) != 2:
        return None
    square = poly_mul(qd, qd)
    fd = form.as_dict()
    m0 = max(square)
    scalar = fd[m0] / square[m0]
    if poly_add(fd, poly_scale(square, scalar), -1):
        raise AssertionError("square-root reconstruction failed")
    return DoubleConic(tuple(sorted(qd.items(), reverse=True)), _quadric_rank(qd), scalar)


def _kernel_point(rows):
    """A nonzero rational point of the projective kernel of a rational matrix."""
    from math import lcm
    ints = []
    for r in rows:
        den = lcm(*[Fraction(c).denominator for c in r])
        ints.append(tuple(int(Fraction(c) * den) for c in r))
    ker = intmat.right_kernel(tuple(ints), 3)
    return ker


def _point_on_line(curve_poly, line):
    """One point of ``curve = 0`` on the line ``line . (x, y, z) = 0``, as (field, coords)."""
    ker = _kernel_point([line])
    u, v = ker[0], ker[1]
    cd = from_sympy(curve_poly)

    def value(pt):
        return sum(c * pt[0] ** m[0] * pt[1] ** m[1] * pt[2] ** m[2] for m, c in cd.items())

    if value(u) == 0:
        return QQ_FIELD, tuple(NFElement(QQ_FIELD, (x,)) for x in u)
    s = sympy.Symbol("s")
    expr = curve_poly.as_expr().subs({X: s * u[0] + v[0], Y: s * u[1] + v[1], Z: s * u[2] + v[2]},
                                     simultaneous=True)
    uni = sympy.Poly(sympy.expand(expr), s, domain=sympy.QQ)
    _, factors = uni.factor_list()
    m, _ = min(factors, key=lambda fe: (fe[0].degree(), str(fe[0])))
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(m.all_coeffs())]
    if len(coeffs) == 2:
        field_ = QQ_FIELD
        root = NFElement(field_, (-coeffs[0] / coeffs[1],))
    else:
        field_ = NumberField(coeffs)
        root = field_.gen
    return field_, tuple(root * u[i] + v[i] for i in range(3))


def _nonreduced_witness(form: QuarticForm):
    """Locate a point of multiplicity >= 3 on a non-reduced quartic that is not a rank-3 double conic."""
    _, factors = form.poly.factor_list()
    for h, e in factors:
        if e >= 3:
            lin = from_sympy(h)
            line = [lin.get(tuple(int(i == j) for i in range(3)), 0) for j in range(3)]
            ker = _kernel_point([line])
            return local_model(form, QQ_FIELD, ker[0])
    for h, e in factors:
        if e == 2 and h.total_degree() == 2:
            # rank-2 quadric irreducible over Q: its vertex is rational
            m = _quadric_matrix(from_sympy(h))
            ker = _kernel_point(m)
            return local_model(form, QQ_FIELD, ker[0])
    for h, e in factors:
        if e == 2 and h.total_degree() == 1:
            lin = from_sympy(h)
            line = [lin.get(tuple(int(i == j) for i in range(3)), 0) for j in range(3)]
            rest = sympy.div(form.poly, h ** 2)[0]
            field_, pt = _point_on_line(rest, line)
            return local_model(form, field_, pt)
    raise AssertionError("non-reduced quartic without a repeated factor")


# ---------------------------------------------------------------------------
# stability

def _witness_for_conic(form, dc: DoubleConic):
    q = to_sympy(dict(dc.q), GENS)
    for line in ((0, 0, 1), (0, 1, 0), (1, 0, 0)):
        field_, pt = _point_on_line(q, line)
        model = local_model(form, field_, pt)
        return classify_singularity(form, model)


def _intersection_profile(q1, q2, tries=8):
    """Intersection multiplicities of two conics, via a resultant after projection.

    A projection can merge two intersection points; the finest profile over
    several seeded projections is kept.
    """
    best = None
    for g in coordinate_changes(seed=CHANGE_SEED + 1):
        a, b = (_poly2({(m[2], m[0], m[1]): c for m, c in substitute_linear(from_sympy(q), g).items()},
                       (Z, X, Y)) for q in (q1, q2))
        if a.degree(Z) != 2 or b.degree(Z) != 2:
            continue
        r = a.resultant(b).set_domain(sympy.QQ)
        if r.is_zero:
            return None   # common component
        dehom = {}
        for (i, _j), c in r.terms():
            dehom[(i,)] = dehom.get((i,), 0) + c
        uni = sympy.Poly.from_dict(dehom, X, domain=sympy.QQ)
        profile = []
        deficit = r.total_degree() - uni.degree()
        if deficit:
            profile.append(deficit)
        _, parts = uni.factor_list()
        for h, e in parts:
            profile.extend([e] * h.degree())
        profile.sort()
        if best is None or len(profile) > len(best):
            best = profile
        tries -= 1
        if tries == 0 or len(best) == 4:
            break
    if best is None:
        raise QuarticError("no projection separates the conics")
    return best


def _minimal_orbit_for_tacnodes(form, reports):
    tac = sum(r.degree for r in reports if r.type == TACNODE)
    others = [r for r in reports if r.type != TACNODE]
    _, factors = form.poly.factor_list()
    degs = sorted(h.total_degree() for h, e in factors)
    notes = []
    if degs == [4]:
        if tac == 2 and not others:
            notes.append("two tangent conics identified from the singular configuration; "
                         "factorization over an extension not attempted")
            return TWO_TANGENT_CONICS, tuple(notes)
        notes.append("factorization over extension not attempted")
        return NOT_MINIMAL, tuple(notes)
    quadrics = None
    if degs == [2, 2]:
        quadrics = [h for h, _ in factors]
    elif degs == [1, 1, 2]:
        lines = [h for h, _ in factors if h.total_degree() == 1]
        quadrics = [h for h, _ in factors if h.total_degree() == 2] + [lines[0] * lines[1]]
    if quadrics is None:
        return NOT_MINIMAL, ("not a union of two conics",)
    ranks = [_quadric_rank(from_sympy(q)) for q in quadrics]
    if max(ranks) < 3:
        return NOT_MINIMAL, ("neither conic is smooth",)
    profile = _intersection_profile(*quadrics)
    if profile == [2, 2] and tac == 2:
        return TWO_TANGENT_CONICS, ()
    return NOT_MINIMAL, (f"conics meet with multiplicities {profile}; warning: "
                         "only tangency at exactly two points is treated as minimal",)


def git_stability(f) -> StabilityVerdict:
    form = _as_form(f)
    if not is_reduced(form):
        dc = is_double_conic(form)
        if dc is not None and dc.rank == 3:
            w = _witness_for_conic(form, dc)
            return StabilityVerdict(STRICTLY_SEMISTABLE, DOUBLE_CONIC, ORBIT_LIMIT_V0, (w,),
                                    (f"double conic q = {dc}",))
        w = classify_singularity(form, _nonreduced_witness(form))
        return StabilityVerdict(UNSTABLE, witnesses=(w,), notes=("non-reduced",))

    reports = [classify_singularity(form, p) for p in singular_points(form)]
    bad = [r for r in reports if r.type in (TRIPLE, HIGHER_A)]
    if bad:
        return StabilityVerdict(UNSTABLE, witnesses=tuple(bad))
    if all(r.type in (NODE, CUSP) for r in reports):
        return StabilityVerdict(STABLE, witnesses=tuple(reports))
    inadmissible = [r for r in reports if r.type == TACNODE and not r.admissible]
    if inadmissible:
        return StabilityVerdict(STRICTLY_SEMISTABLE, NOT_MINIMAL, ORBIT_LIMIT_V0,
                                tuple(reports), ("inadmissible tacnode",))
    orbit, notes = _minimal_orbit_for_tacnodes(form, reports)
    return StabilityVerdict(STRICTLY_SEMISTABLE, orbit, None, tuple(reports), notes)


def singular_type(f, verdict: StabilityVerdict | None = None) -> SingularType:
    form = _as_form(f)
    verdict = verdict or git_stability(form)
    if verdict.stability != STABLE:
        raise QuarticError(f"singular type needs a stable quartic, got {verdict.stability}")
    n = sum(r.degree for r in verdict.witnesses if r.type == NODE)
    c = sum(r.degree for r in verdict.witnesses if r.type == CUSP)
    return SingularType(n, c)
