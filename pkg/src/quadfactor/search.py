"""Height-bounded point search, rational factor detection and a Kronecker oracle."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import gmpy2
import numpy as np

from .arith import BiPoly, UniPoly, poly_divrem, poly_gcd, rational_roots, resultant_q
from .arith.ntheory import divisors
from .arith.rational import format_rational
from .quadrem import QuadrinomialSpec, b_sum_symbolic, f_symbolic, quadratic

# point search

_SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37)
_SQUARE_TABLES = {m: np.zeros(m, dtype=bool) for m in _SIEVE_MODULI}
for _m, _t in _SQUARE_TABLES.items():
    _t[[(i * i) % _m for i in range(_m)]] = True


@dataclass(frozen=True)
class SearchReport:
    model: str
    height_bound: int
    points_found: tuple
    exhaustive_up_to: int
    notes: tuple = ()

    @property
    def empty(self) -> bool:
        return not self.points_found

    def summary(self) -> str:
        if self.empty:
            return f"no points with height <= {self.exhaustive_up_to} on {self.model}"
        return f"{len(self.points_found)} points with height <= {self.exhaustive_up_to} on {self.model}"

    def xs(self) -> list[Fraction]:
        return sorted({x for x, _ in self.points_found})

    def to_json(self) -> dict:
        return {"model": self.model, "bound": self.height_bound,
                "points": [{"x": format_rational(x), "y": format_rational(y)}
                           for x, y in self.points_found],
                "complete": self.exhaustive_up_to >= self.height_bound}


def _homog_mod(coeffs: list[int], u: np.ndarray, v: int, mod: int, total: int) -> np.ndarray:
    """sum c_i u^i v^(total-i) mod `mod` for a vector of u."""
    d = len(coeffs) - 1
    um = np.mod(u, mod)
    vm = v % mod
    acc = np.full(u.shape, coeffs[d] % mod, dtype=np.int64)
    vp = 1
    for i in range(d - 1, -1, -1):
        vp = (vp * vm) % mod
        acc = (acc * um + (coeffs[i] % mod) * vp) % mod
    for _ in range(total - d):
        acc = (acc * vm) % mod
    return acc


def _homog_exact(coeffs: list[int], u: int, v: int, total: int) -> int:
    d = len(coeffs) - 1
    acc = gmpy2.mpz(coeffs[d])
    vp = gmpy2.mpz(1)
    for i in range(d - 1, -1, -1):
        vp *= v
        acc = acc * u + coeffs[i] * vp
    return int(acc * gmpy2.mpz(v) ** (total - d))


def search_points(model, height_bound: int, partition: tuple[int, int] = (0, 1)) -> SearchReport:
    """All affine points x = u/v, y >= 0 on y^2 = rhs(x) with max(|u|, v) <= height_bound.

    ``partition = (i, k)`` restricts to denominators v = i mod k, so disjoint workers can
    split the range and merge with ``merge_reports``.
    """
    if height_bound < 1:
        raise ValueError("height bound must be positive")
    rhs: UniPoly = model.rhs
    if not rhs.is_integral():
        raise ValueError("model right-hand side must have integer coefficients")
    if rhs.is_zero():
        raise ValueError("zero right-hand side")
    coeffs = [int(c) for c in rhs.coeffs]
    d = len(coeffs) - 1
    total = d + (d % 2)
    half = total // 2
    H = height_bound
    idx, k = partition
    points = []
    u_all = np.arange(-H, H + 1, dtype=np.int64)
    for v in range(1, H + 1):
        if v % k != idx:
            continue
        u = u_all[np.gcd(u_all, v) == 1]
        mask = np.ones(u.shape, dtype=bool)
        for mod in _SIEVE_MODULI:
            r = _homog_mod(coeffs, u[mask], v, mod, total)
            sub = _SQUARE_TABLES[mod][r]
            idxs = np.nonzero(mask)[0]
            mask[idxs[~sub]] = False
            if not mask.any():
                break
        for ui in u[mask].tolist():
            val = _homog_exact(coeffs, ui, v, total)
            if val < 0 or not gmpy2.is_square(val):
                continue
            y = Fraction(int(gmpy2.isqrt(val)), v ** half)
            points.append((Fraction(ui, v), y))
    points.sort()
    return SearchReport(model.name, H, tuple(points), H)


def merge_reports(reports: list[SearchReport]) -> SearchReport:
    first = reports[0]
    pts = sorted({p for r in reports for p in r.points_found})
    return SearchReport(first.model, first.height_bound, tuple(pts),
                        min(r.exhaustive_up_to for r in reports))


def search_plane_curve(curve, height_bound: int) -> SearchReport:
    """Points (x, y) on G(x, y) = 0 with x of height <= bound and y rational."""
    pts = []
    H = height_bound
    for v in range(1, H + 1):
        for u in range(-H, H + 1):
            if gcd(u, v) != 1:
                continue
            x = Fraction(u, v)
            g = curve.poly.specialize_p(x)
            if g.is_zero():
                continue
            if not g.degree:
                continue
            for y, _ in rational_roots(g):
                pts.append((x, y))
    pts.sort()
    return SearchReport(curve.name, H, tuple(pts), H,
                        ("y ranges over all rational roots; only x is height-bounded",))


# rational factors of a concrete quadrinomial


def linear_factors_of(spec: QuadrinomialSpec) -> list[tuple[Fraction, int]]:
    """Rational roots of x^n+x^m+x^k+a with multiplicities."""
    f = spec.poly()
    return rational_roots(f)


def _common_rational_roots(f: UniPoly, g: UniPoly) -> list[Fraction]:
    if f.is_zero() and g.is_zero():
        raise ValueError("degenerate elimination")
    h = g if f.is_zero() else f if g.is_zero() else poly_gcd(f, g)
    if not h.degree:
        return []
    return [r for r, _ in rational_roots(h)]


def quadratic_factors_of(spec: QuadrinomialSpec) -> list[tuple[Fraction, Fraction]]:
    """All (p, q) with x^2+px+q dividing x^n+x^m+x^k+a, by elimination of q."""
    if spec.a == 0:
        raise ValueError("a must be nonzero")
    n, m, k = spec.exponents()
    F = f_symbolic(n, m, k)
    G = b_sum_symbolic(n, m, k) + BiPoly.const(spec.a)
    cands: set[tuple[Fraction, Fraction]] = set()
    R = resultant_q(F, G) if F.deg_q and G.deg_q else UniPoly()
    if not R.is_zero():
        ps = [r for r, _ in rational_roots(R)] if R.degree else []
        for p in ps:
            for q in _common_rational_roots(F.specialize_p(p), G.specialize_p(p)):
                cands.add((p, q))
    else:
        # fall back to eliminating p instead
        Fs, Gs = F.swap(), G.swap()
        R = resultant_q(Fs, Gs) if Fs.deg_q and Gs.deg_q else UniPoly()
        if R.is_zero():
            raise ValueError("degenerate elimination")
        qs = [r for r, _ in rational_roots(R)] if R.degree else []
        for q in qs:
            for p in _common_rational_roots(F.specialize_q(q), G.specialize_q(q)):
                cands.add((p, q))
    f = spec.poly()
    out = []
    for p, q in sorted(cands):
        if poly_divrem(f, quadratic(p, q))[1].is_zero():
            out.append((p, q))
    return out


# Kronecker oracle


def oracle_max_degree() -> int:
    try:
        return int(os.environ.get("QUADFACTOR_ORACLE_MAXDEG", "14"))
    except ValueError:
        return 14


ORACLE_MAX_FACTOR_DEGREE = 7


@dataclass(frozen=True)
class OracleResult:
    poly: UniPoly
    max_deg: int
    factor: UniPoly | None = None
    cofactor: UniPoly | None = None

    @property
    def found(self) -> bool:
        return self.factor is not None

    def certificate(self) -> str:
        if self.found:
            return f"factor {self.factor.render()} of degree {self.factor.degree}"
        return f"no factor of degree <= {self.max_deg}"

    def to_json(self) -> dict:
        out = {"poly": self.poly.render(), "max_deg": self.max_deg, "found": self.found}
        if self.found:
            out["factor"] = self.factor.render()
            out["cofactor"] = self.cofactor.render()
        else:
            out["certificate"] = self.certificate()
        return out


def _ceil_root(x: Fraction, e: int) -> int:
    """Smallest integer b >= 0 with b^e >= x."""
    if x <= 0:
        return 0
    n = -((-x.numerator) // x.denominator)
    b = int(gmpy2.iroot(gmpy2.mpz(n), e)[0])
    while b ** e < x:
        b += 1
    return b


def root_bound(c: list[int]) -> int:
    """Integer upper bound on the absolute values of all complex roots (Fujiwara)."""
    n = len(c) - 1
    lead = abs(c[n])
    best = 0
    for i in range(1, n + 1):
        val = Fraction(abs(c[n - i]), lead)
        if i == n:
            val /= 2
        best = max(best, _ceil_root(val, i))
    return max(1, 2 * best)


def _interp_basis(xs: list[int]) -> tuple[list[list[int]], int]:
    """Integer-scaled Lagrange basis: D * l_i(x) as integer coefficient lists."""
    d = len(xs)
    basis = []
    denoms = []
    for i, xi in enumerate(xs):
        num = [1]
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = [0] + num
            for t in range(len(num) - 1):
                num[t] -= xj * num[t + 1]
            den *= xi - xj
        basis.append(num)
        denoms.append(den)
    D = 1
    for den in denoms:
        D = D * abs(den) // gcd(D, abs(den))
    scaled = [[x * (D // den) for x in b] for b, den in zip(basis, denoms)]
    assert all(len(b) == d for b in scaled)
    return scaled, D


def _window_divisors(value: int, lo: int, hi: int, sign: int) -> list[int]:
    return [sign * t for t in divisors(value) if lo <= t <= hi]


def _int_eval(c: list[int], x: int) -> int:
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _search_degree(F: list[int], d: int, R: int) -> list[int] | None:
    """An integer factor of F of exact degree d, or None."""
    n = len(F) - 1
    lc = F[n]
    pts_pool = []
    for j in range(1, 3 * d + 8):
        pts_pool.extend([R + j, -(R + j)])
    values = {u: _int_eval(F, u) for u in pts_pool}
    for c in divisors(lc):
        cands = {}
        for u in pts_pool:
            a = abs(u) - R
            b = abs(u) + R
            sign = 1 if u > 0 else (-1) ** d
            cands[u] = _window_divisors(values[u], c * a ** d, c * b ** d, sign)
        if any(not v for v in cands.values()):
            continue
        chosen = sorted(pts_pool, key=lambda u: (len(cands[u]), abs(u)))[:d]
        extra = [u for u in pts_pool if u not in chosen]
        xs = sorted(chosen)
        basis, D = _interp_basis(xs)
        # c * prod (x - u_i), ascending coefficients
        base = [c]
        for xi in xs:
            base = [0] + base
            for t in range(len(base) - 1):
                base[t] -= xi * base[t + 1]
        for ys in itertools.product(*(cands[u] for u in xs)):
            L = [0] * d
            for yi, b in zip(ys, basis):
                for t in range(d):
                    L[t] += yi * b[t]
            if any(x % D for x in L):
                continue
            g = [base[t] + (L[t] // D if t < d else 0) for t in range(d + 1)]
            ok = True
            for u in extra:
                gu = _int_eval(g, u)
                if gu == 0 or values[u] % gu:
                    ok = False
                    break
            if not ok:
                continue
            if poly_divrem(UniPoly(F), UniPoly(g))[1].is_zero():
                return g
    return None


def kronecker_factor(f: UniPoly, max_deg: int) -> OracleResult:
    """Exhaustive search for a rational factor of degree between 1 and max_deg.

    The factor returned is monic of the smallest possible degree; a negative result is a
    certificate that no such factor exists.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.degree
    if n > oracle_max_degree() or max_deg > ORACLE_MAX_FACTOR_DEGREE:
        raise ValueError("oracle out of range")
    if max_deg < 1 or n < 2:
        return OracleResult(f, max_deg)
    roots = rational_roots(f)
    if roots:
        g = UniPoly([-roots[0][0], 1])
        return OracleResult(f, max_deg, g, f // g)
    F = [int(c) for c in f.primitive().coeffs]
    R = root_bound(F)
    for d in range(2, min(max_deg, n // 2) + 1):
        g = _search_degree(F, d, R)
        if g is not None:
            gm = UniPoly(g).monic()
            return OracleResult(f, max_deg, gm, f // gm)
    return OracleResult(f, max_deg)


def min_factor_degree(f, bound: int) -> int | None:
    """Smallest degree d <= bound of a rational factor, or None.

    For a quadrinomial spec, degree 2 is decided by elimination and the oracle is only
    consulted for degrees 3 and up.
    """
    if isinstance(f, QuadrinomialSpec):
        spec, poly = f, f.poly()
    else:
        spec, poly = None, f
    if poly.degree is None:
        raise ValueError("zero polynomial")
    if bound >= 1 and rational_roots(poly):
        return 1
    if bound >= 2 and spec is not None and spec.a != 0:
        if quadratic_factors_of(spec):
            return 2
        start = 3
    else:
        start = 2
    top = min(bound, poly.degree // 2) if poly.degree else 0
    if start > top:
        if bound >= poly.degree and poly.degree:
            return poly.degree
        return None
    res = kronecker_factor(poly, top)
    if res.found:
        return res.factor.degree
    if bound >= poly.degree:
        return poly.degree
    return None
