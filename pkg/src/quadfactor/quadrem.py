"""Remainders of x^n modulo x^2 + p x + q.

x^n mod (x^2+px+q) = A_n(p,q) x + B_n(p,q), where
A_0 = 0, A_1 = 1, A_n = -p A_{n-1} - q A_{n-2} and B_n = -q A_{n-1}.

A quadratic x^2+px+q divides x^n + x^m + x^k + a exactly when
A_n+A_m+A_k = 0 and a = -(B_n+B_m+B_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import BiPoly, UniPoly, poly_divrem, to_rational
from .arith.ntheory import rational_sqrt


@dataclass(frozen=True)
class RemainderPair:
    n: int
    A: object
    B: object


@dataclass(frozen=True)
class QuadrinomialSpec:
    n: int
    m: int
    k: int
    a: Fraction

    def __post_init__(self):
        for e in (self.n, self.m, self.k):
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError("exponents must be integers")
        if not self.n > self.m > self.k >= 1:
            raise ValueError(f"need n > m > k >= 1, got ({self.n}, {self.m}, {self.k})")
        object.__setattr__(self, "a", to_rational(self.a))

    @property
    def degenerate(self) -> bool:
        return self.a == 0

    def poly(self) -> UniPoly:
        return UniPoly.quadrinomial(self.n, self.m, self.k, self.a)

    def exponents(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.k)


@lru_cache(maxsize=None)
def _a_symbolic(n: int) -> BiPoly:
    if n == 0:
        return BiPoly()
    if n == 1:
        return BiPoly.const(1)
    p = BiPoly.var(0)
    q = BiPoly.var(1)
    return -p * _a_symbolic(n - 1) - q * _a_symbolic(n - 2)


def ab_symbolic(n: int) -> RemainderPair:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return RemainderPair(0, BiPoly(), BiPoly.const(1))
    return RemainderPair(n, _a_symbolic(n), -BiPoly.var(1) * _a_symbolic(n - 1))


def a_symbolic(n: int) -> BiPoly:
    return ab_symbolic(n).A


def ab_eval(n: int, p, q) -> tuple:
    """(A_n, B_n) at a point by the scalar recurrence.

    Works for any ring values p, q (Fractions, ints, UniPoly) that support
    + and *.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not isinstance(p, UniPoly):
        p = to_rational(p)
    if not isinstance(q, UniPoly):
        q = to_rational(q)
    if n == 0:
        return Fraction(0), Fraction(1)
    a_prev, a_cur = Fraction(0), Fraction(1)
    for _ in range(n - 1):
        a_prev, a_cur = a_cur, -p * a_cur - q * a_prev
    return a_cur, -q * a_prev


def a_sequence(upto: int, p, q) -> list:
    """[A_0, ..., A_upto] at (p, q)."""
    p, q = to_rational(p), to_rational(q)
    out = [Fraction(0), Fraction(1)]
    while len(out) <= upto:
        out.append(-p * out[-1] - q * out[-2])
    return out[: upto + 1]


def binet_eval(n: int, p, q) -> Fraction:
    """Closed form for A_n when p^2 - 4q is a nonzero rational square."""
    p, q = to_rational(p), to_rational(q)
    disc = p * p - 4 * q
    root = rational_sqrt(disc) if disc != 0 else None
    if root is None:
        raise ValueError("binet inapplicable over rationals")
    r1 = (root - p) / 2
    r2 = (-root - p) / 2
    return (r1 ** n - r2 ** n) / root


def remainder_of_quadrinomial(spec: QuadrinomialSpec, p, q) -> tuple[Fraction, Fraction]:
    """(A_n+A_m+A_k, B_n+B_m+B_k+a) at (p, q)."""
    a_sum = Fraction(0)
    b_sum = spec.a
    for e in spec.exponents():
        A, B = ab_eval(e, p, q)
        a_sum += A
        b_sum += B
    return a_sum, b_sum


def quadratic(p, q) -> UniPoly:
    return UniPoly([q, p, 1])


def derive_a(n: int, m: int, k: int, p, q) -> Fraction:
    """The constant a for which x^2+px+q divides x^n+x^m+x^k+a."""
    if not n > m > k >= 1:
        raise ValueError(f"need n > m > k >= 1, got ({n}, {m}, {k})")
    p, q = to_rational(p), to_rational(q)
    a_sum = Fraction(0)
    b_sum = Fraction(0)
    for e in (n, m, k):
        A, B = ab_eval(e, p, q)
        a_sum += A
        b_sum += B
    if a_sum != 0:
        raise ValueError("no quadrinomial in this family through (p,q)")
    a = -b_sum
    rem = poly_divrem(UniPoly.quadrinomial(n, m, k, a), quadratic(p, q))[1]
    if not rem.is_zero():
        raise AssertionError("division check failed after deriving a")
    return a


def f_symbolic(n: int, m: int, k: int) -> BiPoly:
    """F_{n,m,k} = A_n + A_m + A_k in (p, q)."""
    if not n > m > k >= 1:
        raise ValueError(f"need n > m > k >= 1, got ({n}, {m}, {k})")
    return a_symbolic(n) + a_symbolic(m) + a_symbolic(k)


def b_sum_symbolic(n: int, m: int, k: int) -> BiPoly:
    """B_n + B_m + B_k in (p, q)."""
    return ab_symbolic(n).B + ab_symbolic(m).B + ab_symbolic(k).B


def a_at_one(n: int) -> UniPoly:
    """A_n(1, t) as a polynomial in t."""
    value = ab_eval(n, UniPoly.const(1), UniPoly.x())[0]
    return value if isinstance(value, UniPoly) else UniPoly.const(value)
