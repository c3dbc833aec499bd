"""Division, gcd, rational roots, resultants and squarefree decomposition.

Heavy lifting happens on primitive integer coefficient lists (ascending) so
that large resultants stay fast; the public functions take and return
:class:`UniPoly` values.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import gmpy2

from .bipoly import BiPoly
from .ntheory import divisor_count, divisors, small_primes
from .unipoly import UniPoly, deg_lt

# poly_divrem


def poly_divrem(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if deg_lt(f.degree, g.degree):
        return UniPoly(), f
    rem = list(f.coeffs)
    dg = g.degree
    inv = 1 / g.lc
    quo = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] * inv
        if c:
            quo[i - dg] = c
            for j, gc in enumerate(g.coeffs):
                rem[i - dg + j] -= c * gc
    return UniPoly(quo), UniPoly(rem[:dg])


def divides(g: UniPoly, f: UniPoly) -> bool:
    return poly_divrem(f, g)[1].is_zero()


# integer coefficient list helpers (ascending, trimmed)


def _int_primitive(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = gcd(g, x)
    if g == 0:
        return []
    out = [x // g for x in c]
    return [-x for x in out] if out[-1] < 0 else out


def _int_derivative(c: list[int]) -> list[int]:
    return [i * x for i, x in enumerate(c)][1:]


def _int_exact_div(f: list[int], g: list[int]) -> list[int] | None:
    """f / g in Z[x] if g divides f there, else None."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    if len(f) < len(g):
        return None
    rem = list(f)
    dg = len(g) - 1
    lg = g[-1]
    quo = [0] * (len(f) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c, r = divmod(rem[i], lg)
        if r:
            return None
        if c:
            quo[i - dg] = c
            for j in range(dg + 1):
                rem[i - dg + j] -= c * g[j]
    if any(rem[:dg]):
        return None
    return quo


def _eval_at(c: list[int], x) -> int:
    v = gmpy2.mpz(0)
    for a in reversed(c):
        v = v * x + a
    return v


def _unpack_signed(v, base: int, nbits: int | None = None) -> list[int]:
    """Digits of v in symmetric base-`base` representation, ascending."""
    out = []
    half = base // 2
    v = gmpy2.mpz(v)
    while v:
        if nbits is not None:
            r = v & (base - 1)
        else:
            r = v % base
        if r > half:
            r -= base
        out.append(int(r))
        if nbits is not None:
            v = (v - r) >> nbits
        else:
            v = (v - r) // base
    return out


def _euclid_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def _heuristic_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """Heuristic gcd by evaluation at a large integer; verified by division."""
    norm = min(max(abs(x) for x in f), max(abs(x) for x in g))
    xi = 2 * norm + 29
    for _ in range(6):
        h = gmpy2.gcd(_eval_at(f, xi), _eval_at(g, xi))
        cand = _int_primitive(_unpack_signed(h, xi))
        if cand and _int_exact_div(f, cand) is not None and _int_exact_div(g, cand) is not None:
            return cand
        xi = xi * 73794 // 27011
    return None


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd. Uses a verified heuristic for large inputs, else monic Euclid."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return UniPoly.const(1)
    fi = _int_primitive(f.integer_coeffs())
    gi = _int_primitive(g.integer_coeffs())
    big = max(len(fi), len(gi)) > 12 or max(abs(x) for x in fi + gi).bit_length() > 64
    if big:
        h = _heuristic_gcd(fi, gi)
        if h is not None:
            return UniPoly(h).monic()
    return _euclid_gcd(f, g)


def _int_gcd_poly(f: list[int], g: list[int]) -> list[int]:
    return _int_primitive(poly_gcd(UniPoly(f), UniPoly(g)).integer_coeffs())


# rational roots


def _homog_eval_fast(c: list[int], u: int, v: int):
    acc = gmpy2.mpz(0)
    vp = gmpy2.mpz(1)
    for a in reversed(c):
        acc = acc * u + a * vp
        vp *= v
    return acc


def _roots_by_divisors(s: list[int]) -> list[Fraction]:
    lead, trail = s[-1], s[0]
    found = []
    for v in divisors(lead):
        for u in divisors(trail):
            if gcd(u, v) != 1:
                continue
            for su in (u, -u):
                if _homog_eval_fast(s, su, v) == 0:
                    found.append(Fraction(su, v))
    return found


def _rational_reconstruct(r: int, mod: int, nbound: int, dbound: int) -> Fraction | None:
    """u/v with u = v*r mod `mod`, |u| <= nbound, 0 < v <= dbound."""
    r0, r1 = mod, r % mod
    t0, t1 = 0, 1
    while r1 > nbound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        t0, t1 = t1, t0 - qt * t1
    if t1 == 0 or abs(t1) > dbound:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if gcd(r1, t1) != 1:
        return None
    return Fraction(r1, t1)


def _roots_padic(s: list[int]) -> list[Fraction]:
    """Roots of a squarefree integer polynomial with nonzero constant term."""
    lead, trail = abs(s[-1]), abs(s[0])
    need = 2 * lead * trail + 1
    ds = _int_derivative(s)
    for ell in small_primes(200000)[1:]:
        if lead % ell == 0:
            continue
        sm = [x % ell for x in s]
        dm = [x % ell for x in ds]
        roots = []
        bad = False
        for r in range(ell):
            acc = 0
            for a in reversed(sm):
                acc = (acc * r + a) % ell
            if acc == 0:
                dacc = 0
                for a in reversed(dm):
                    dacc = (dacc * r + a) % ell
                if dacc == 0:
                    bad = True
                    break
                roots.append(r)
        if bad:
            continue
        found = []
        for r in roots:
            mod = ell
            x = r
            while mod < need:
                mod = mod * mod
                fx = _eval_at(s, x) % mod
                dfx = _eval_at(ds, x) % mod
                x = int((x - fx * gmpy2.invert(dfx, mod)) % mod)
            cand = _rational_reconstruct(x, mod, trail, lead)
            if cand is not None and _homog_eval_fast(s, cand.numerator, cand.denominator) == 0:
                found.append(cand)
        return found
    raise RuntimeError("no suitable prime found for root lifting")


def _squarefree_int(c: list[int]) -> list[int]:
    if len(c) <= 2:
        return c
    g = _int_gcd_poly(c, _int_derivative(c))
    if len(g) <= 1:
        return c
    q = _int_exact_div(c, g)
    assert q is not None
    return _int_primitive(q)


def rational_roots(f: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted by value."""
    if f.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    c = _int_primitive(f.integer_coeffs())
    result: list[tuple[Fraction, int]] = []
    zero_mult = 0
    while c and c[0] == 0:
        c = c[1:]
        zero_mult += 1
    if zero_mult:
        result.append((Fraction(0), zero_mult))
    if len(c) <= 1:
        return sorted(result)
    s = _squarefree_int(c)
    lead, trail = abs(s[-1]), abs(s[0])
    small = lead.bit_length() <= 64 and trail.bit_length() <= 64
    if small and divisor_count(lead) * divisor_count(trail) <= 4000:
        roots = _roots_by_divisors(s)
    else:
        roots = _roots_padic(s)
    for r in roots:
        lin = [-r.numerator, r.denominator]
        mult = 0
        while True:
            q = _int_exact_div(c, lin)
            if q is None:
                break
            c = q
            mult += 1
        result.append((r, mult))
    return sorted(result)


# resultants


def _bareiss_det(m: list[list]) -> object:
    n = len(m)
    if n == 0:
        return gmpy2.mpz(1)
    m = [list(row) for row in m]
    sign = 1
    prev = gmpy2.mpz(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return gmpy2.mpz(0)
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def resultant_q(F: BiPoly, G: BiPoly) -> UniPoly:
    """Sylvester resultant with respect to the second variable, as a polynomial in the first.

    Coefficient polynomials are packed into integers by evaluation at a power
    of two large enough that the determinant can be unpacked exactly.
    """
    df, dg = F.deg_q, G.deg_q
    if not df or not dg:
        raise ValueError("resultant needs both inputs of positive degree in q")
    fq, gq = F.coeffs_in_q(), G.coeffs_in_q()
    lf = 1
    for c in fq:
        lf = lf * c.denominator_lcm() // gcd(lf, c.denominator_lcm())
    lg = 1
    for c in gq:
        lg = lg * c.denominator_lcm() // gcd(lg, c.denominator_lcm())
    fi = [[int(x * lf) for x in c.coeffs] for c in fq]
    gi = [[int(x * lg) for x in c.coeffs] for c in gq]
    l1f = sum(sum(abs(x) for x in c) for c in fi)
    l1g = sum(sum(abs(x) for x in c) for c in gi)
    bound = max(1, l1f) ** dg * max(1, l1g) ** df
    nbits = bound.bit_length() + 2
    base = gmpy2.mpz(1) << nbits
    fv = [_eval_at(c, base) for c in fi]
    gv = [_eval_at(c, base) for c in gi]
    size = df + dg
    zero = gmpy2.mpz(0)
    rows = []
    for r in range(dg):
        row = [zero] * size
        for j in range(df + 1):
            row[r + j] = fv[df - j]
        rows.append(row)
    for r in range(df):
        row = [zero] * size
        for j in range(dg + 1):
            row[r + j] = gv[dg - j]
        rows.append(row)
    det = _bareiss_det(rows)
    coeffs = _unpack_signed(det, int(base), nbits)
    scale = Fraction(1, lf ** dg * lg ** df)
    return UniPoly(Fraction(x) * scale for x in coeffs)


# squarefree decomposition


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm. Returns [(g_i, i)] with f = lc * prod g_i^i, g_i monic squarefree."""
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    if f.is_constant():
        return []
    fm = f.monic()
    d = fm.derivative()
    a = poly_gcd(fm, d)
    b = poly_divrem(fm, a)[0]
    c = poly_divrem(d, a)[0]
    dd = c - b.derivative()
    out = []
    i = 1
    while not b.is_constant():
        a = poly_gcd(b, dd)
        if not a.is_constant():
            out.append((a.monic(), i))
        b = poly_divrem(b, a)[0]
        c = poly_divrem(dd, a)[0]
        dd = c - b.derivative()
        i += 1
    return out


def squarefree_part(f: UniPoly) -> UniPoly:
    out = UniPoly.const(1)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out
