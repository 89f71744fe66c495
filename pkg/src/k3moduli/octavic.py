"""Binary octavics: root multiplicities, GIT stability and the cone-curve dictionary.

Roots are never computed numerically.  The multiplicity profile comes from
a squarefree decomposition followed by factorization over Q, with the point
``(1 : 0)`` (where ``y`` vanishes) handled through the drop in x-degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import sympy

from .poly import format_polynomial, homogeneous_degree, parse_polynomial
from .stability import (
    NOT_MINIMAL,
    STABLE,
    STRICTLY_SEMISTABLE,
    UNSTABLE,
    StabilityVerdict,
)

__all__ = [
    "OctavicError",
    "BinaryOctavic",
    "RootFactor",
    "RootMultiplicities",
    "parse_octavic",
    "multiplicities",
    "octavic_stability",
    "cone_curve_singularities",
    "TWO_QUADRUPLE_POINTS",
]

X, Y = sympy.symbols("x y")
DEGREE = 8
TWO_QUADRUPLE_POINTS = "two_quadruple_points"

CONE_TYPES = {1: "smooth", 2: "node", 3: "cusp", 4: "tacnode"}


class OctavicError(ValueError):
    pass


@dataclass(frozen=True)
class BinaryOctavic:
    """``sum a_i x^i y^(8-i)`` with ``coefficients[i] = a_i``."""

    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != DEGREE + 1:
            raise OctavicError("a binary octavic has 9 coefficients")
        if not any(self.coefficients):
            raise OctavicError("zero form")

    @classmethod
    def from_dict(cls, d):
        d = {m: Fraction(c) for m, c in d.items() if c}
        if not d:
            raise OctavicError("zero form")
        deg = homogeneous_degree(d)
        if deg is None:
            raise OctavicError("form is not homogeneous")
        if deg != DEGREE:
            raise OctavicError(f"form has degree {deg}, expected {DEGREE}")
        coeffs = [Fraction(0)] * (DEGREE + 1)
        for (i, _j), c in d.items():
            coeffs[i] = c
        return cls(tuple(coeffs))

    def as_dict(self):
        return {(i, DEGREE - i): c for i, c in enumerate(self.coefficients) if c}

    def __str__(self):
        return format_polynomial(self.as_dict(), ("x", "y"))

    @cached_property
    def poly(self):
        return sympy.Poly.from_dict(
            {m: sympy.Rational(c.numerator, c.denominator) for m, c in self.as_dict().items()},
            X, Y, domain=sympy.QQ)

    def transform(self, g):
        """Substitute ``x -> a x + b y``, ``y -> c x + d y`` for ``g = ((a, b), (c, d))``."""
        (a, b), (c, d) = g
        expr = self.poly.as_expr().subs({X: a * X + b * Y, Y: c * X + d * Y}, simultaneous=True)
        p = sympy.Poly(expr, X, Y, domain=sympy.QQ)
        return BinaryOctavic.from_dict({m: Fraction(int(v.numerator), int(v.denominator))
                                        for m, v in p.terms()})

    def swap(self):
        return BinaryOctavic(tuple(reversed(self.coefficients)))


def parse_octavic(text: str) -> BinaryOctavic:
    p = parse_polynomial(text, ("x", "y"))
    if not p:
        raise OctavicError("zero form")
    return BinaryOctavic.from_dict(p)


def _as_octavic(f):
    return parse_octavic(f) if isinstance(f, str) else f


@dataclass(frozen=True)
class RootFactor:
    factor: str        # irreducible binary form over Q
    multiplicity: int
    degree: int        # number of geometric points it contributes

    def to_json(self):
        return {"factor": self.factor, "multiplicity": self.multiplicity, "degree": self.degree}


@dataclass(frozen=True)
class RootMultiplicities:
    factors: tuple

    def __post_init__(self):
        if sum(f.multiplicity * f.degree for f in self.factors) != DEGREE:
            raise AssertionError("root multiplicities do not add up to 8")

    @property
    def profile(self):
        """Multiplicity of each geometric root, sorted decreasingly."""
        return tuple(sorted((f.multiplicity for f in self.factors for _ in range(f.degree)),
                            reverse=True))

    @property
    def max_multiplicity(self):
        return max(f.multiplicity for f in self.factors)

    def to_json(self):
        return [f.to_json() for f in self.factors]


def multiplicities(f) -> RootMultiplicities:
    form = _as_octavic(f)
    coeffs = form.coefficients
    at_infinity = DEGREE - max(i for i, c in enumerate(coeffs) if c)
    uni = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                     X, domain=sympy.QQ)
    out = []
    if at_infinity:
        out.append(RootFactor("y", at_infinity, 1))
    _, parts = uni.sqf_list()
    for part, mult in parts:
        _, irreducible = part.factor_list()
        for h, e in irreducible:
            # e == 1 on a squarefree part
            hom = sympy.Poly(sympy.expand(h.as_expr().subs(X, X / Y) * Y ** h.degree()), X, Y)
            monic = hom.monic() if hom.LC() else hom
            text = str(monic.as_expr()).replace("**", "^")
            out.append(RootFactor(text, mult * e, h.degree()))
    out.sort(key=lambda r: (-r.multiplicity, r.degree, r.factor))
    return RootMultiplicities(tuple(out))


def cone_type(m: int) -> str:
    return CONE_TYPES.get(m, "higher")


def cone_curve_singularities(f) -> list:
    """Singularities of ``y^2 = p_8`` on the quadric cone, one entry per geometric point."""
    prof = multiplicities(f).profile
    return sorted(cone_type(m) for m in prof if m >= 2)


@dataclass(frozen=True)
class RootReport:
    root: RootFactor
    cone_singularity: str

    @property
    def degree(self):
        return self.root.degree

    def to_json(self):
        out = self.root.to_json()
        out["cone_singularity"] = self.cone_singularity
        return out


def octavic_stability(f) -> StabilityVerdict:
    mults = multiplicities(f)
    top = mults.max_multiplicity
    witnesses = tuple(RootReport(r, cone_type(r.multiplicity)) for r in mults.factors
                      if r.multiplicity >= 2)
    if top <= 3:
        return StabilityVerdict(STABLE, witnesses=witnesses)
    if top >= 5:
        worst = tuple(w for w in witnesses if w.root.multiplicity >= 5)
        return StabilityVerdict(UNSTABLE, witnesses=worst)
    orbit = TWO_QUADRUPLE_POINTS if mults.profile == (4, 4) else NOT_MINIMAL
    return StabilityVerdict(STRICTLY_SEMISTABLE, orbit, witnesses=witnesses)
