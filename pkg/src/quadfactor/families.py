"""Closed-form families of reducible quadrinomials and related checks."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import UniPoly, poly_gcd, rational_roots, squarefree_decomposition, to_rational
from .curves import t_model_rhs
from .quadrem import QuadrinomialSpec, quadratic, remainder_of_quadrinomial
from .search import kronecker_factor, oracle_max_degree
from .witness import FamilyWitness, make_witness

# degree four


def deg4_family(case, p) -> FamilyWitness:
    """x^4+x^m+x^k+a = (cofactor)(x^2+px+q) for (m, k) in {(2,1), (3,1), (3,2)}."""
    m, k = tuple(case)
    p = to_rational(p)
    if (m, k) == (2, 1):
        if p == 0:
            raise ValueError("p = 0 is excluded for (2,1)")
        q = (p ** 3 + p - 1) / (2 * p)
        a = (p ** 3 + p - 1) * (p ** 3 + p + 1) / (4 * p * p)
        cof = UniPoly([(p ** 3 + p + 1) / (2 * p), -p, 1])
    elif (m, k) == (3, 1):
        if p == Fraction(1, 2):
            raise ValueError("p = 1/2 is excluded for (3,1)")
        q = (p ** 3 - p * p - 1) / (2 * p - 1)
        a = (p ** 3 - 2 * p * p + p + 1) * (p ** 3 - p * p - 1) / (2 * p - 1) ** 2
        cof = UniPoly([(p ** 3 - 2 * p * p + p + 1) / (2 * p - 1), -(p - 1), 1])
    elif (m, k) == (3, 2):
        if p == Fraction(1, 2):
            raise ValueError("p = 1/2 is excluded for (3,2)")
        q = p * (p * p - p + 1) / (2 * p - 1)
        a = (p - 1) * p * (p * p - p + 1) ** 2 / (2 * p - 1) ** 2
        cof = UniPoly([(p - 1) * (p * p - p + 1) / (2 * p - 1), -(p - 1), 1])
    else:
        raise ValueError("case must be one of (2,1), (3,1), (3,2)")
    w = make_witness(4, m, k, a, quadratic(p, q), f"deg4{(m, k)}", {"p": p, "q": q})
    if w.cofactor != cof:
        raise AssertionError("cofactor differs from the closed form")
    return w


# special values of A_n

_SPECIAL = {(-2, 2), (2, 2), (3, 3)}


def special_An(case, n: int) -> int:
    """A_n(p, q) for (p, q) in {(-2,2), (2,2), (3,3)} from its residue-class formula."""
    case = tuple(case)
    if case not in _SPECIAL:
        raise ValueError("case must be one of (-2,2), (2,2), (3,3)")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if case == (3, 3):
        j, r = divmod(n, 6)
        sg = (-1) ** j
        return {0: 0,
                1: sg * 3 ** (3 * j),
                2: -sg * 3 ** (3 * j + 1),
                3: 2 * sg * 3 ** (3 * j + 1),
                4: -sg * 3 ** (3 * j + 2),
                5: sg * 3 ** (3 * j + 2)}[r]
    j, r = divmod(n, 4)
    sg = (-1) ** j
    if r == 0:
        return 0
    if r == 1:
        return sg * 2 ** (2 * j)
    if case == (-2, 2):
        return sg * 2 ** (2 * j + 1)
    return -sg * 2 ** (2 * j + 1) if r == 2 else sg * 2 ** (2 * j + 1)


# quadratics dividing infinitely many quadrinomials

DIV22_CASES = ("minus22", "plus22_a", "plus22_b", "plus33_a", "plus33_b")


def div22_exponents(case: str, s: int, t: int = 0) -> tuple[int, int, int, Fraction, tuple[int, int]]:
    if case == "minus22":
        if s < 0:
            raise ValueError("s must be >= 0")
        return 4 * s + 5, 4 * s + 3, 4 * s + 2, Fraction((-1) ** s * 3 * 2 ** (2 * s + 1)), (-2, 2)
    if s < 1:
        raise ValueError("s must be >= 1")
    if case == "plus22_a":
        if t < 0:
            raise ValueError("t must be >= 0")
        a = 2 ** (2 * s - 1) * (-1) ** (s + t + 1) * (2 ** (2 * t + 1) + (-1) ** (t + 1))
        return 4 * s + 4 * t, 4 * s - 1, 4 * s - 2, Fraction(a), (2, 2)
    if case == "plus22_b":
        if t < s:
            raise ValueError("t must be >= s")
        a = 2 ** (2 * s) * (-1) ** (t + 1) * (2 ** (2 * t - 2 * s + 1) + (-1) ** (t - s))
        return 4 * t + 3, 4 * t + 2, 4 * s, Fraction(a), (2, 2)
    if case == "plus33_a":
        if t < 0:
            raise ValueError("t must be >= 0")
        a = 3 ** (3 * s - 1) * (-1) ** (s + t + 1) * (3 ** (3 * t + 1) + (-1) ** (t + 1))
        return 6 * s + 6 * t, 6 * s - 1, 6 * s - 2, Fraction(a), (3, 3)
    if case == "plus33_b":
        if t < s:
            raise ValueError("t must be >= s")
        a = 3 ** (3 * s) * (-1) ** (t + 1) * (3 ** (3 * t - 3 * s + 2) + (-1) ** (t - s))
        return 6 * t + 5, 6 * t + 4, 6 * s, Fraction(a), (3, 3)
    raise ValueError(f"unknown case {case!r}")


def div22_family(case: str, s: int, t: int = 0) -> FamilyWitness:
    n, m, k, a, (p, q) = div22_exponents(case, s, t)
    spec = QuadrinomialSpec(n, m, k, a)
    if remainder_of_quadrinomial(spec, p, q) != (0, 0):
        raise ArithmeticError(f"{case} with s={s}, t={t} does not divide")
    flags = () if gcd(gcd(n, m), k) == 1 else ("gcd(n,m,k)>1",)
    return make_witness(n, m, k, a, quadratic(p, q), case, {"s": s, "t": t}, flags)


_SCALED_BASES = {
    "x^2-2x+2": ((-2, 2), 2),
    "x^2+2x+2": ((2, 2), 2),
    "x^2+3x+3": ((3, 3), 3),
}


def _base_key(base) -> str:
    if isinstance(base, UniPoly):
        base = base.render().replace(" ", "").replace("*", "")
    key = str(base).replace(" ", "").replace("*", "")
    if key not in _SCALED_BASES:
        raise ValueError("base must be x^2-2x+2, x^2+2x+2 or x^2+3x+3")
    return key


def scaled_family(base, s: int) -> UniPoly:
    """b^(2s) h(x / b^s) for h = x^2+px+q with q = b."""
    if s < 0:
        raise ValueError("s must be >= 0")
    (p, q), b = _SCALED_BASES[_base_key(base)]
    t = b ** s
    return UniPoly([q * t * t, p * t, 1])


def scaled_member(base, s: int, n: int, m: int, k: int, a) -> tuple[UniPoly, UniPoly]:
    """If h divides x^n+x^m+x^k+a, the scaled quadratic divides
    x^n + T^(n-m) x^m + T^(n-k) x^k + T^n a with T = b^s.  Returns (H, that polynomial)."""
    (p, q), b = _SCALED_BASES[_base_key(base)]
    T = b ** s
    a = to_rational(a)
    g = [Fraction(0)] * (n + 1)
    g[n] += 1
    g[m] += T ** (n - m)
    g[k] += T ** (n - k)
    g[0] += T ** n * a
    return scaled_family(base, s), UniPoly(g)


# degree ten


def deg10_family(u) -> FamilyWitness:
    u = to_rational(u)
    if u == 0:
        raise ValueError("u = 0 gives a = 0")
    a = -(u ** 5) - u ** 3 - u
    return make_witness(10, 6, 2, a, UniPoly([-u, 0, 1]), "deg10", {"u": u})


# cubes of a trinomial


def redquad_family(n: int, m: int) -> FamilyWitness:
    """x^{3n}+x^{3m}+x^{n+m}-1/27 = (x^n+x^m-1/3)(x^{2n}-x^{n+m}+x^{2m}+x^n/3+x^m/3+1/9)."""
    if not (isinstance(n, int) and isinstance(m, int)) or not n > m >= 1:
        raise ValueError("need n > m >= 1")
    f1 = [Fraction(0)] * (n + 1)
    f1[n] += 1
    f1[m] += 1
    f1[0] += Fraction(-1, 3)
    f2 = [Fraction(0)] * (2 * n + 1)
    f2[2 * n] += 1
    f2[n + m] -= 1
    f2[2 * m] += 1
    f2[n] += Fraction(1, 3)
    f2[m] += Fraction(1, 3)
    f2[0] += Fraction(1, 9)
    F1, F2 = UniPoly(f1), UniPoly(f2)
    g = [Fraction(0)] * (3 * n + 1)
    g[3 * n] += 1
    g[3 * m] += 1
    g[n + m] += 1
    g[0] += Fraction(-1, 27)
    G = UniPoly(g)
    if F1 * F2 != G:
        raise AssertionError("redquad identity failed")
    params = {"n": n, "m": m}
    if n == 2 * m:
        return FamilyWitness(None, F1, F2, "redquad", params, ("exponent collision",), G)
    e = sorted((3 * n, 3 * m, n + m), reverse=True)
    return FamilyWitness(QuadrinomialSpec(e[0], e[1], e[2], Fraction(-1, 27)), F1, F2,
                         "redquad", params)


def redquad_corollary_check(N: int, M: int) -> bool:
    """f = x^N+x^M+x^{(N+M)/3}-1/27 has no small factor and f(x^3) splits as in redquad."""
    if not N > M >= 1 or (N * M) % 3 == 0 or (N + M) % 3:
        raise ValueError("need N > M, N*M not divisible by 3, N+M divisible by 3")
    L = (N + M) // 3
    g = [Fraction(0)] * (N + 1)
    g[N] += 1
    g[M] += 1
    g[L] += 1
    g[0] += Fraction(-1, 27)
    f = UniPoly(g)
    if rational_roots(f):
        return False
    if f.degree <= oracle_max_degree():
        if kronecker_factor(f, min(f.degree // 2, 7)).found:
            return False
    w = redquad_family(N, M)
    return w.verify() and w.poly == f.compose(UniPoly.monomial(3))


# multiplicities and squarefreeness


def multiplicity_profile(spec: QuadrinomialSpec) -> tuple[int, list[tuple[UniPoly, int]]]:
    dec = squarefree_decomposition(spec.poly())
    return max((i for _, i in dec), default=0), dec


def conjecture_Fmn_squarefree(m: int, n: int) -> bool:
    """True iff A_{n-m}(1,t)^2 - 4 A_{n-2m}(1,t) A_n(1,t) has no repeated root."""
    if not (m >= 1 and n > 2 * m):
        raise ValueError("need n > 2m >= 2")
    F = t_model_rhs(n, m)
    if F.degree is None or F.degree < 1:
        return True
    return not poly_gcd(F, F.derivative()).degree


PRIME_CONSTANTS = (5, 7, 11, 13)


def prime_constant_irreducible(prime_a: int, n: int, m: int, k: int) -> bool:
    """Oracle check that x^n+x^m+x^k+prime_a has no factor of degree <= n/2."""
    if prime_a not in PRIME_CONSTANTS:
        raise ValueError("prime_a must be one of 5, 7, 11, 13")
    spec = QuadrinomialSpec(n, m, k, prime_a)
    if n > oracle_max_degree() or n // 2 > 7:
        raise ValueError("oracle out of range")
    return not kronecker_factor(spec.poly(), n // 2).found
