from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st
from sympy.polys.subresultants_qq_zz import sylvester

from conftest import X, from_sympy, to_sympy
from quadfactor.arith import (BiPoly, UniPoly, format_rational, height, parse_poly, parse_rational,
                              poly_divrem, poly_gcd, rational_roots, resultant_q,
                              squarefree_decomposition)
from quadfactor.arith.ntheory import is_rational_fourth_power, rational_sqrt, square_part
from quadfactor.arith.series import limit_along_curve

rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(rats, min_size=1, max_size=8).map(UniPoly)
nonzero_polys = polys.filter(lambda f: not f.is_zero())


@given(polys, nonzero_polys)
def test_divrem_identity(f, g):
    q, r = poly_divrem(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(polys, nonzero_polys)
def test_divrem_matches_sympy(f, g):
    q, r = poly_divrem(f, g)
    sq, sr = sp.div(to_sympy(f), to_sympy(g))
    assert to_sympy(q) == sq and to_sympy(r) == sr


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_matches_sympy(a, b, c):
    f, g = a * c, b * c
    ours = poly_gcd(f, g)
    theirs = sp.gcd(to_sympy(f), to_sympy(g)).monic()
    assert to_sympy(ours) == theirs


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=9))
def test_rational_roots_match_sympy(cs):
    f = UniPoly(cs)
    if f.is_zero() or not f.degree:
        return
    ours = {r: m for r, m in rational_roots(f)}
    theirs = {}
    for r, m in sp.roots(to_sympy(f), filter="Q").items():
        theirs[Fraction(int(sp.fraction(r)[0]), int(sp.fraction(r)[1]))] = m
    assert ours == theirs


def test_rational_roots_large_coefficients():
    roots = [Fraction(3, 7), Fraction(-10**12 + 39, 11), Fraction(5)]
    f = UniPoly([1])
    for r in roots:
        f = f * UniPoly([-r, 1])
    f = f * UniPoly([1, 0, 1])
    assert sorted(r for r, _ in rational_roots(f)) == sorted(roots)


@given(nonzero_polys, nonzero_polys)
def test_squarefree_decomposition(a, b):
    f = a * b * b
    if not f.degree:
        return
    dec = squarefree_decomposition(f)
    prod = UniPoly.const(f.lc)
    for g, i in dec:
        prod = prod * g ** i
        assert poly_gcd(g, g.derivative()).degree == 0
    assert prod == f
    _, sym = sp.sqf_list(to_sympy(f))
    assert max((i for _, i in dec), default=0) == max((i for _, i in sym), default=0)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9), max_size=8),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9), max_size=8))
def test_resultant_matches_sympy(t1, t2):
    F, G = BiPoly(t1), BiPoly(t2)
    if not F.deg_q or not G.deg_q:
        return
    p, q = sp.symbols("p q")
    sF = sum(c * p ** i * q ** j for (i, j), c in t1.items())
    sG = sum(c * p ** i * q ** j for (i, j), c in t2.items())
    # sympy.resultant gets the sign wrong in some cases (Res(q+2, q^3) = 8); the
    # Sylvester determinant is the definition
    theirs = sp.expand(sylvester(sF, sG, q).det())
    assert to_sympy(resultant_q(F, G), p).as_expr() == theirs


def test_parse_and_format():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("17") == 17
    for bad in ("0.5", "1e3", "1/0", "x"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    assert format_rational(Fraction(-21, 32)) == "-21/32"
    assert height(Fraction(-12, 5)) == 12
    f = parse_poly("x^5 + x^3 + x - 12")
    assert f == UniPoly([-12, 1, 0, 1, 0, 1])
    assert f.render() == "x^5 + x^3 + x - 12"
    assert parse_poly("x^3 - 1/3*x + 1/9") == UniPoly([Fraction(1, 9), Fraction(-1, 3), 0, 1])


def test_ntheory_helpers():
    assert rational_sqrt(Fraction(49, 36)) == Fraction(7, 6)
    assert rational_sqrt(Fraction(2)) is None
    assert is_rational_fourth_power(Fraction(16, 81))
    assert not is_rational_fourth_power(Fraction(12))
    assert square_part(72) == 6


def test_sympy_roundtrip_helper():
    f = from_sympy(sp.expand((X - 1) ** 2 * (3 * X + 2) / 5))
    assert f == UniPoly([Fraction(2, 5), Fraction(-1, 5), Fraction(-4, 5), Fraction(3, 5)])


def test_limit_along_curve():
    # on y^2 = x^3 - x^2 + x, y^2/x -> 1 at the origin
    names = ("x", "y")
    x, y = BiPoly.var(0, names), BiPoly.var(1, names)
    curve = y * y - (x * x * x - x * x + x)
    assert limit_along_curve(y * y, x, curve, (0, 0)) == 1
    with pytest.raises(ZeroDivisionError):
        limit_along_curve(x + 1, y * y, curve, (0, 0))
    with pytest.raises(ValueError):
        limit_along_curve(x, y, curve, (1, 5))
