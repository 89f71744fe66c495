"""Polynomial parsing, sparse exact polynomials and simple number fields.

Polynomials are dicts mapping exponent tuples to ``Fraction`` (or number
field elements).  The text grammar is::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' uint)?

A leading sign on a term is accepted as well.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import sympy

__all__ = [
    "ParseError",
    "parse_polynomial",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_scale",
    "homogeneous_degree",
    "format_polynomial",
    "to_sympy",
    "from_sympy",
    "NumberField",
    "NFElement",
    "QQ_FIELD",
    "upoly_gcd",
]


class ParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


# ---------------------------------------------------------------------------
# sparse dict polynomials

def _clean(p):
    return {m: c for m, c in p.items() if c != 0}


def poly_add(p, q, sign=1):
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return _clean(out)


def poly_scale(p, k):
    return _clean({m: c * k for m, c in p.items()})


def poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return _clean(out)


def poly_pow(p, k, nvars):
    out = {(0,) * nvars: Fraction(1)}
    base = p
    while k:
        if k & 1:
            out = poly_mul(out, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return out


def homogeneous_degree(p):
    """Common total degree of all monomials, or None if mixed (or zero poly)."""
    degs = {sum(m) for m in p}
    return degs.pop() if len(degs) == 1 else None


def format_polynomial(p, variables):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, reverse=True):
        c = p[m]
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(variables, m) if e)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.pos = 0
        self.vars = variables
        self.n = len(variables)

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def parse(self):
        if not self.text.strip():
            self.error("empty input", 0)
        p = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        p = poly_scale(self.term(), sign)
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            q = self.term()
            p = poly_add(p, q, 1 if op == "+" else -1)
        return p

    def term(self):
        p = self.factor()
        while self.peek() == "*":
            self.pos += 1
            p = poly_mul(p, self.factor())
        return p

    def factor(self):
        b = self.base()
        if self.peek() == "^":
            self.pos += 1
            b = poly_pow(b, self.uint(), self.n)
        return b

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return p
        if ch.isdigit():
            num = self.uint()
            value = Fraction(num)
            if self.peek() == "/":
                self.pos += 1
                self.skip()
                start = self.pos
                den = self.uint()
                if den == 0:
                    self.error("zero denominator", start)
                value = Fraction(num, den)
            return _clean({(0,) * self.n: value})
        if ch in self.vars:
            self.pos += 1
            i = self.vars.index(ch)
            return {tuple(int(k == i) for k in range(self.n)): Fraction(1)}
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_polynomial(text: str, variables=("x", "y", "z")):
    return _Parser(text, tuple(variables)).parse()


def to_sympy(p, gens):
    return sympy.Poly.from_dict({m: sympy.Rational(c.numerator, c.denominator) for m, c in p.items()},
                                *gens, domain=sympy.QQ)


def from_sympy(poly):
    return {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in poly.terms() if c != 0}


# ---------------------------------------------------------------------------
# number fields Q[t]/(m)

def _upoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_divmod(a, b):
    a = list(a)
    b = _upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    inv = 1 / lead if not isinstance(lead, NFElement) else lead.inverse()
    a = _upoly_trim(a)
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] = a[i + k] - f * c
        a = _upoly_trim(a)
    return _upoly_trim(q), a


def upoly_gcd(a, b):
    """Monic gcd of univariate polynomials (coefficient lists, low degree first)."""
    a, b = _upoly_trim(a), _upoly_trim(b)
    while b:
        _, r = _upoly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    inv = 1 / lead if not isinstance(lead, NFElement) else lead.inverse()
    return [c * inv for c in a]


class NumberField:
    """``Q[t]/(m)`` for a monic irreducible ``m`` given low degree first."""

    def __init__(self, modulus):
        m = [Fraction(c) for c in modulus]
        m = _upoly_trim(m)
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        lead = m[-1]
        self.modulus = tuple(c / lead for c in m)
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __call__(self, value):
        if isinstance(value, NFElement):
            return value
        return NFElement(self, (Fraction(value),))

    @property
    def gen(self):
        if self.degree == 1:
            return NFElement(self, (-self.modulus[0],))
        return NFElement(self, (Fraction(0), Fraction(1)))

    def modulus_str(self, var="t"):
        return format_polynomial({(i,): c for i, c in enumerate(self.modulus) if c}, (var,))

    def __repr__(self):
        return "QQ" if self.degree == 1 else f"QQ[t]/({self.modulus_str()})"


class NFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        c = [Fraction(x) for x in coeffs]
        m = field.modulus
        d = field.degree
        # reduce modulo the monic modulus
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead:
                for i in range(d + 1):
                    c[k - d + i] -= lead * m[i]
        c = c[:d]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return NFElement(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return NFElement(self.field, ())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return NFElement(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = NFElement(self.field, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in number field")
        # extended Euclid over Q[t]
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while _upoly_trim(r1):
            q, r = _upoly_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _upoly_trim(_mul_lists(q, s1))
            s0, s1 = s1, _sub_lists(s0, qs)
        # r0 is a nonzero constant because the modulus is irreducible
        r0 = _upoly_trim(r0)
        if len(r0) != 1:
            raise ZeroDivisionError("modulus is not irreducible")
        return NFElement(self.field, [c / r0[0] for c in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NFElement(self.field, (other,))
        if not isinstance(other, NFElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def rational(self):
        """The value as a Fraction if it lies in Q, else None."""
        if len(self.coeffs) <= 1:
            return self.coeffs[0] if self.coeffs else Fraction(0)
        return None

    def __str__(self):
        if self.field.degree == 1 or len(self.coeffs) <= 1:
            return str(self.coeffs[0]) if self.coeffs else "0"
        return format_polynomial({(i,): c for i, c in enumerate(self.coeffs) if c}, ("t",))

    __repr__ = __str__


def _mul_lists(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _sub_lists(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


QQ_FIELD = NumberField((0, 1))


def binomial_power(a, k):
    """Coefficients of (X + a)^k, low degree first."""
    return [comb(k, i) * a ** (k - i) for i in range(k + 1)]
