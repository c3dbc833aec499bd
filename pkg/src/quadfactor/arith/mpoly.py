"""Sparse multivariate Laurent polynomials over the rationals.

Only used to write down and triangularly solve coefficient-matching systems,
where solving a linear equation means dividing by a monomial such as 2p.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .bipoly import BiPoly
from .rational import format_rational, to_rational
from .unipoly import UniPoly


class MPoly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        names = tuple(names)
        clean: dict[tuple, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(names):
                raise ValueError("exponent length mismatch")
            c = to_rational(c)
            if c:
                clean[tuple(e)] = clean.get(tuple(e), Fraction(0)) + c
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def const(cls, names, c) -> "MPoly":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names, name: str) -> "MPoly":
        names = tuple(names)
        e = [0] * len(names)
        e[names.index(name)] = 1
        return cls(names, {tuple(e): 1})

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("variable sets differ")
            return other
        return MPoly.const(self.names, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        try:
            return self.terms == self._lift(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __add__(self, other) -> "MPoly":
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MPoly":
        o = self._lift(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        out = MPoly.const(self.names, 1)
        for _ in range(n):
            out = out * self
        return out

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def divide_by_monomial(self, mono: "MPoly") -> "MPoly":
        if not mono.is_monomial():
            raise ValueError("can only divide by a monomial")
        (em, cm), = mono.terms.items()
        return MPoly(self.names, {tuple(a - b for a, b in zip(e, em)): c / cm
                                  for e, c in self.terms.items()})

    def degree_in(self, name: str) -> int:
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree_in(self, name: str) -> int:
        i = self.names.index(name)
        return min((e[i] for e in self.terms), default=0)

    def coeff_of(self, name: str, power: int) -> "MPoly":
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MPoly(self.names, out)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for n, x in zip(self.names, e):
                if x:
                    used.add(n)
        return used

    def substitute(self, name: str, value: "MPoly") -> "MPoly":
        i = self.names.index(name)
        value = self._lift(value)
        out = MPoly(self.names)
        cache: dict[int, MPoly] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < 0:
                raise ValueError("cannot substitute into a negative power")
            if k not in cache:
                cache[k] = value ** k
            e2 = list(e)
            e2[i] = 0
            out = out + MPoly(self.names, {tuple(e2): c}) * cache[k]
        return out

    def evaluate(self, values: Mapping[str, object]):
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for n, x in zip(self.names, e):
                if x:
                    t = t * to_rational(values[n]) ** x
            acc += t
        return acc

    def clear_negative(self, name: str) -> tuple["MPoly", int]:
        """Multiply by name^k so that no negative powers of name remain."""
        k = max(0, -self.min_degree_in(name))
        i = self.names.index(name)
        e = [0] * len(self.names)
        e[i] = k
        return self * MPoly(self.names, {tuple(e): 1}), k

    def to_bipoly(self, first: str, second: str) -> BiPoly:
        i, j = self.names.index(first), self.names.index(second)
        out = {}
        for e, c in self.terms.items():
            if any(x for t, x in enumerate(e) if t not in (i, j)):
                raise ValueError("polynomial involves other variables")
            out[(e[i], e[j])] = c
        return BiPoly(out, (first, second))

    def to_unipoly(self, name: str) -> UniPoly:
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if any(x for t, x in enumerate(e) if t != i) or e[i] < 0:
                raise ValueError("not a polynomial in a single variable")
            out[e[i]] = c
        return UniPoly(out.get(d, 0) for d in range(max(out, default=-1) + 1))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            mono = []
            for n, x in zip(self.names, e):
                if x == 1:
                    mono.append(n)
                elif x:
                    mono.append(f"{n}^{x}")
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = format_rational(mag) + "*" + "*".join(mono)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self.render()!r})"
