"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending order with trailing zeros trimmed. The
zero polynomial has ``degree`` equal to ``None``; code that compares degrees
goes through :func:`deg_lt` so that ``None`` behaves like minus infinity.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .rational import format_rational, to_rational


def deg_lt(d1: int | None, d2: int | None) -> bool:
    """d1 < d2 with None (zero polynomial) below every integer."""
    if d1 is None:
        return d2 is not None
    if d2 is None:
        return False
    return d1 < d2


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # construction helpers

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "UniPoly":
        return cls([0] * n + [c])

    @classmethod
    def from_desc(cls, coeffs: Sequence) -> "UniPoly":
        """Build from coefficients listed highest degree first."""
        return cls(list(reversed(list(coeffs))))

    @classmethod
    def quadrinomial(cls, n: int, m: int, k: int, a) -> "UniPoly":
        cs = [Fraction(0)] * (n + 1)
        for e in (n, m, k):
            cs[e] += 1
        cs[0] += to_rational(a)
        return cls(cs)

    # basic queries

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def desc(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic

    @staticmethod
    def _lift(other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly.const(other)

    def __add__(self, other) -> "UniPoly":
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        from .algorithms import poly_divrem
        return poly_divrem(self, self._lift(other))

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def scale(self, c) -> "UniPoly":
        c = to_rational(c)
        return UniPoly(c * x for x in self.coeffs)

    def __call__(self, value):
        # Horner; works for any ring element supporting + and *.
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        return Fraction(0) if acc is None else acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self.scale(1 / self.lc)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> "UniPoly":
        """x -> -x."""
        return UniPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    # integer forms

    def denominator_lcm(self) -> int:
        return lcm(1, *(c.denominator for c in self.coeffs))

    def integer_coeffs(self) -> list[int]:
        """Coefficients scaled by the common denominator, ascending."""
        d = self.denominator_lcm()
        return [int(c * d) for c in self.coeffs]

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[x]."""
        if not self.coeffs:
            return Fraction(0)
        d = self.denominator_lcm()
        g = 0
        for c in self.integer_coeffs():
            g = gcd(g, c)
        return Fraction(g, d)

    def primitive(self) -> "UniPoly":
        """Primitive integer form with positive leading coefficient."""
        if not self.coeffs:
            return self
        p = self.scale(1 / self.content())
        return -p if p.lc < 0 else p

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # text

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if i == 0:
                body = format_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"UniPoly({self.render()!r})"

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "UniPoly":
        return parse_poly(text, var)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?:(?P<var>[A-Za-z_]\w*)(?:\s*(?:\^|\*\*)\s*(?P<exp>\d+))?)?$"""
)


def parse_poly(text: str, var: str | None = None) -> UniPoly:
    """Parse sums of monomials such as ``x^5 + x^3 + x - 12`` or ``3/4*x^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    seen_var = var
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        m = _TERM_RE.match(piece[1:])
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            if seen_var is None:
                seen_var = m.group("var")
            elif m.group("var") != seen_var:
                raise ValueError(f"mixed variables in {text!r}")
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            if m.group("exp"):
                raise ValueError(f"bad term {piece!r}")
            e = 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * coef
    top = max(coeffs)
    return UniPoly(coeffs.get(i, 0) for i in range(top + 1))
