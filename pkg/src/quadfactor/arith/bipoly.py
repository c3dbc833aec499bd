"""Sparse bivariate polynomials over the rationals.

Terms map an exponent pair ``(i, j)`` to a nonzero coefficient, ``i`` being
the exponent of the first variable (p or t) and ``j`` of the second (q or s).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .rational import format_rational, to_rational
from .unipoly import UniPoly


class BiPoly:
    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None,
                 names: tuple[str, str] = ("p", "q")):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = to_rational(c)
            if c:
                clean[(i, j)] = clean.get((i, j), Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "names", tuple(names))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def const(cls, c, names=("p", "q")) -> "BiPoly":
        return cls({(0, 0): c}, names)

    @classmethod
    def var(cls, which: int, names=("p", "q")) -> "BiPoly":
        return cls({(1, 0) if which == 0 else (0, 1): 1}, names)

    @classmethod
    def from_unipoly(cls, f: UniPoly, which: int = 0, names=("p", "q")) -> "BiPoly":
        if which == 0:
            return cls({(i, 0): c for i, c in enumerate(f.coeffs)}, names)
        return cls({(0, j): c for j, c in enumerate(f.coeffs)}, names)

    def with_names(self, names) -> "BiPoly":
        return BiPoly(self.terms, names)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_p(self) -> int | None:
        return max((i for i, _ in self.terms), default=None)

    @property
    def deg_q(self) -> int | None:
        return max((j for _, j in self.terms), default=None)

    def coeffs_in_q(self) -> list[UniPoly]:
        """[c_0(p), c_1(p), ...] with self = sum c_j(p) q^j."""
        dq = self.deg_q
        if dq is None:
            return []
        buckets: list[dict[int, Fraction]] = [dict() for _ in range(dq + 1)]
        for (i, j), c in self.terms.items():
            buckets[j][i] = c
        return [UniPoly(b.get(i, 0) for i in range(max(b, default=-1) + 1)) for b in buckets]

    def coeffs_in_p(self) -> list[UniPoly]:
        return self.swap().coeffs_in_q()

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}, self.names[::-1])

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        try:
            return self.terms == BiPoly.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # arithmetic

    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_unipoly(other, 0, self.names)
        return BiPoly.const(other, self.names)

    def __add__(self, other) -> "BiPoly":
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out, self.names)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "BiPoly":
        o = self._lift(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BiPoly(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        result, base = BiPoly.const(1, self.names), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by p^di q^dj."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self.terms.items()}, self.names)

    # evaluation

    def __call__(self, p, q):
        acc = None
        for (i, j), c in self.terms.items():
            t = c * (p ** i) * (q ** j)
            acc = t if acc is None else acc + t
        return Fraction(0) if acc is None else acc

    def specialize_p(self, p) -> UniPoly:
        """Polynomial in q after fixing p."""
        p = to_rational(p)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, Fraction(0)) + c * p ** i
        return UniPoly(out.get(j, 0) for j in range(max(out, default=-1) + 1))

    def specialize_q(self, q) -> UniPoly:
        """Polynomial in p after fixing q."""
        return self.swap().specialize_p(q)

    def substitute(self, p_expr: UniPoly, q_expr: UniPoly) -> UniPoly:
        """Replace both variables by polynomials in a single new variable."""
        acc = UniPoly()
        for (i, j), c in self.terms.items():
            acc = acc + (p_expr ** i) * (q_expr ** j) * c
        return acc

    def render(self) -> str:
        if not self.terms:
            return "0"
        pv, qv = self.names
        parts = []
        for (i, j) in sorted(self.terms, key=lambda e: (-(e[0] + e[1]), -e[0])):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append(pv if i == 1 else f"{pv}^{i}")
            if j:
                mono.append(qv if j == 1 else f"{qv}^{j}")
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
        return f"BiPoly({self.render()!r})"
