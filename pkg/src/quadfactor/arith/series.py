"""Truncated power series and limits of rational maps along curve branches."""

from __future__ import annotations

from fractions import Fraction

from .bipoly import BiPoly
from .rational import to_rational


class Series:
    __slots__ = ("c", "prec")

    def __init__(self, coeffs, prec: int):
        c = [to_rational(x) for x in list(coeffs)[:prec]]
        c += [Fraction(0)] * (prec - len(c))
        self.c = c
        self.prec = prec

    @classmethod
    def const(cls, value, prec: int) -> "Series":
        return cls([value], prec)

    def _lift(self, other) -> "Series":
        return other if isinstance(other, Series) else Series.const(other, self.prec)

    def __add__(self, other) -> "Series":
        o = self._lift(other)
        return Series([a + b for a, b in zip(self.c, o.c)], self.prec)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-a for a in self.c], self.prec)

    def __sub__(self, other) -> "Series":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Series":
        return self._lift(other) - self

    def __mul__(self, other) -> "Series":
        o = self._lift(other)
        n = self.prec
        out = [Fraction(0)] * n
        for i, a in enumerate(self.c):
            if a:
                for j in range(n - i):
                    if o.c[j]:
                        out[i + j] += a * o.c[j]
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        out = Series.const(1, self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def order(self) -> int | None:
        for i, a in enumerate(self.c):
            if a:
                return i
        return None


def _branch(curve: BiPoly, x0: Fraction, y0: Fraction, prec: int) -> tuple[Series, Series]:
    """Local parametrization (x(t), y(t)) of curve(x, y) = 0 through (x0, y0)."""
    gx = _partial(curve, 0)(x0, y0)
    gy = _partial(curve, 1)(x0, y0)
    if gy != 0:
        x = Series([x0, 1], prec)
        y = Series([y0], prec)
        for _ in range(prec):
            y = y - curve(x, y) * (1 / gy)
        return x, y
    if gx != 0:
        y = Series([y0, 1], prec)
        x = Series([x0], prec)
        for _ in range(prec):
            x = x - curve(x, y) * (1 / gx)
        return x, y
    raise ValueError("singular point: no unique branch")


def _partial(f: BiPoly, which: int) -> BiPoly:
    out = {}
    for (i, j), c in f.terms.items():
        if which == 0 and i:
            out[(i - 1, j)] = c * i
        if which == 1 and j:
            out[(i, j - 1)] = c * j
    return BiPoly(out, f.names)


def limit_along_curve(num: BiPoly, den: BiPoly, curve: BiPoly, point, max_prec: int = 40) -> Fraction:
    """Value of num/den at a point of curve = 0 where both may vanish.

    Raises ZeroDivisionError if the map has a pole there.
    """
    x0, y0 = (to_rational(v) for v in point)
    if curve(x0, y0) != 0:
        raise ValueError("point is not on the curve")
    d = den(x0, y0)
    if d != 0:
        return num(x0, y0) / d
    prec = 8
    while prec <= max_prec:
        x, y = _branch(curve, x0, y0, prec)
        ns, ds = num(x, y), den(x, y)
        od = ds.order() if isinstance(ds, Series) else None
        on = ns.order() if isinstance(ns, Series) else None
        if od is not None:
            if on is not None and on < od:
                raise ZeroDivisionError("rational map has a pole at this point")
            return ns.c[od] / ds.c[od]
        prec *= 2
    raise ValueError("denominator vanishes identically along the branch")
