from fractions import Fraction
from math import gcd

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import X, to_sympy
from quadfactor.arith import UniPoly, parse_poly, poly_divrem
from quadfactor.arith.ntheory import rational_sqrt
from quadfactor.curves import hxh_models, quadratic_factor_curve
from quadfactor.quadrem import QuadrinomialSpec
from quadfactor.search import (kronecker_factor, linear_factors_of, merge_reports,
                               min_factor_degree, quadratic_factors_of, search_plane_curve,
                               search_points)
from reference_values import C_10_6_2_POINTS

small_int_polys = st.lists(st.integers(-5, 5), min_size=2, max_size=5).map(UniPoly).filter(
    lambda f: f.degree is not None and f.degree >= 1)


def _sympy_min_degree(f: UniPoly) -> int:
    _, facs = sp.factor_list(to_sympy(f))
    return min(g.degree() for g, _ in facs)


def _sympy_monic_quadratic_divisors(f: UniPoly) -> set:
    _, facs = sp.factor_list(to_sympy(f))
    out = set()
    lin = []
    for g, e in facs:
        g = g.monic()
        if g.degree() == 2:
            out.add(g)
        if g.degree() == 1:
            lin.extend([g] * min(e, 2))
    for i in range(len(lin)):
        for j in range(i + 1, len(lin)):
            out.add(sp.Poly(lin[i] * lin[j], X))
    res = set()
    for g in out:
        _, p, q = (Fraction(str(c)) for c in g.all_coeffs())
        res.add((p, q))
    return res


def _brute_points(model, H):
    pts = []
    for v in range(1, H + 1):
        for u in range(-H, H + 1):
            if gcd(u, v) != 1:
                continue
            x = Fraction(u, v)
            y = rational_sqrt(model.rhs(x))
            if y is not None:
                pts.append((x, y))
    return sorted(pts)


def test_reference_quadratic_factors():
    assert quadratic_factors_of(QuadrinomialSpec(5, 3, 1, -12)) == [(-1, 3)]
    assert quadratic_factors_of(QuadrinomialSpec(5, 4, 3, -1)) == [(0, 1)]
    with pytest.raises(ValueError):
        quadratic_factors_of(QuadrinomialSpec(5, 4, 3, 0))


@settings(max_examples=40)
@given(st.integers(3, 9), st.integers(2, 8), st.integers(1, 7),
       st.fractions(min_value=-30, max_value=30, max_denominator=8).filter(bool))
def test_quadratic_factors_match_sympy(n, m, k, a):
    if not n > m > k:
        return
    spec = QuadrinomialSpec(n, m, k, a)
    assert set(quadratic_factors_of(spec)) == _sympy_monic_quadratic_divisors(spec.poly())


def test_quadratic_factors_on_constructed_products():
    # products with known quadratic factors
    for n, m, k, a, pq in ((6, 5, 4, 18, (3, 3)), (5, 3, 2, -363, (-2, 11)), (10, 6, 2, -3, (0, -1))):
        spec = QuadrinomialSpec(n, m, k, a)
        got = set(quadratic_factors_of(spec))
        assert tuple(map(Fraction, pq)) in got
        assert got == _sympy_monic_quadratic_divisors(spec.poly())


def test_linear_factors():
    spec = QuadrinomialSpec(4, 3, 1, 1)
    assert linear_factors_of(spec) == [(-1, 2)]


@settings(max_examples=30)
@given(small_int_polys, small_int_polys)
def test_kronecker_matches_sympy(g, h):
    f = g * h
    if f.degree > 10:
        return
    res = kronecker_factor(f, f.degree // 2)
    d = _sympy_min_degree(f)
    if d <= f.degree // 2:
        assert res.found and res.factor.degree == d
        assert res.factor * res.cofactor == f
    else:
        assert not res.found


def test_kronecker_certificates():
    res = kronecker_factor(QuadrinomialSpec(7, 5, 3, 8).poly(), 3)
    assert res.found and res.factor == parse_poly("x^3 - x^2 - x + 2")
    res = kronecker_factor(parse_poly("x^6 + x^5 + x^4 + 5"), 3)
    assert not res.found and "no factor of degree <= 3" in res.certificate()
    with pytest.raises(ValueError):
        kronecker_factor(UniPoly(), 2)
    with pytest.raises(ValueError):
        kronecker_factor(parse_poly("x^4 + 1"), 8)


def test_oracle_cap_env(monkeypatch):
    monkeypatch.setenv("QUADFACTOR_ORACLE_MAXDEG", "6")
    with pytest.raises(ValueError, match="oracle out of range"):
        kronecker_factor(parse_poly("x^7 + x + 1"), 2)
    monkeypatch.setenv("QUADFACTOR_ORACLE_MAXDEG", "nonsense")
    assert not kronecker_factor(parse_poly("x^7 + x^5 + x^3 + 5"), 3).found


def test_min_factor_degree():
    assert min_factor_degree(QuadrinomialSpec(7, 5, 3, 8), 3) == 3
    assert min_factor_degree(QuadrinomialSpec(5, 3, 1, -12), 3) == 2
    assert min_factor_degree(QuadrinomialSpec(4, 3, 1, 1), 3) == 1
    assert min_factor_degree(parse_poly("x^5 + x^3 + x + 5"), 5) == 5
    assert min_factor_degree(parse_poly("x^8 + x^3 + 5"), 3) is None


@pytest.mark.parametrize("name", ["521", "541"])
def test_empty_quartic_searches(name):
    # bounded evidence only: nothing up to height 100
    M = quadratic_factor_curve(5, int(name[1]), int(name[2]))
    rep = search_points(M, 100)
    assert rep.empty and rep.exhaustive_up_to == 100
    assert "no points with height <= 100" in rep.summary()


@pytest.mark.parametrize("nmk", [(5, 3, 1), (6, 4, 1), (6, 5, 1), (6, 2, 1), (7, 6, 5)])
def test_search_matches_brute_force(nmk):
    from quadfactor.curves import model_for
    M = model_for(*nmk)
    rep = search_points(M, 25)
    assert list(rep.points_found) == [pt for pt in _brute_points(M, 25) if pt[1] >= 0]


def test_search_partition_merge():
    M = quadratic_factor_curve(5, 3, 1)
    whole = search_points(M, 40)
    parts = [search_points(M, 40, (i, 3)) for i in range(3)]
    merged = merge_reports(parts)
    assert merged.points_found == whole.points_found
    with pytest.raises(ValueError):
        search_points(M, 0)


def test_plane_search_c_10_6_2():
    C = hxh_models(10, 6, 2).models[0]
    rep = search_plane_curve(C, 40)
    # the reference list repeats (-4, 1); (-4, -1) is also on the curve
    expected = set(C_10_6_2_POINTS) | {(Fraction(-4), Fraction(-1))}
    assert set(rep.points_found) == expected


def test_quadratic_factor_divides():
    for (p, q) in quadratic_factors_of(QuadrinomialSpec(6, 4, 1, Fraction(-34881, 8))):
        assert poly_divrem(QuadrinomialSpec(6, 4, 1, Fraction(-34881, 8)).poly(),
                           UniPoly([q, p, 1]))[1].is_zero()
