"""Integer helpers: exact square tests and divisor enumeration."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import gmpy2


def is_square(n: int) -> bool:
    return n >= 0 and bool(gmpy2.is_square(n))


def rational_sqrt(r: Fraction) -> Fraction | None:
    """Nonnegative rational square root, or None if r is not a square."""
    r = Fraction(r)
    if r < 0:
        return None
    u, v = r.numerator, r.denominator
    su, sv = isqrt(u), isqrt(v)
    if su * su == u and sv * sv == v:
        return Fraction(su, sv)
    return None


def is_rational_fourth_power(r: Fraction) -> bool:
    s = rational_sqrt(r)
    return s is not None and rational_sqrt(s) is not None


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending. n must be nonzero."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    from sympy import divisors as _divisors
    return [int(d) for d in _divisors(abs(n))]


def divisor_count(n: int) -> int:
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    from sympy import divisor_count as _dc
    return int(_dc(abs(n)))


def square_part(n: int) -> int:
    """Largest s > 0 with s^2 dividing n."""
    if n == 0:
        return 0
    from sympy import factorint
    s = 1
    for pr, e in factorint(abs(n)).items():
        s *= int(pr) ** (e // 2)
    return s


def small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(sieve) if f]
