import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import X, to_sympy
from quadfactor.arith import BiPoly, UniPoly, poly_divrem
from quadfactor.quadrem import (QuadrinomialSpec, a_at_one, ab_eval, ab_symbolic, a_sequence,
                                binet_eval, derive_a, f_symbolic, quadratic,
                                remainder_of_quadrinomial)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=15)


def _rand_rat(rng, h=30):
    return Fraction(rng.randint(-h, h), rng.randint(1, h))


def test_spec_validation():
    assert QuadrinomialSpec(5, 3, 1, -12).poly() == UniPoly([-12, 1, 0, 1, 0, 1])
    for bad in ((3, 3, 1), (5, 1, 3), (4, 2, 0)):
        with pytest.raises(ValueError):
            QuadrinomialSpec(*bad, 1)
    assert QuadrinomialSpec(4, 3, 2, 0).degenerate


def test_small_cases():
    r2 = ab_symbolic(2)
    assert r2.A(Fraction(3), Fraction(5)) == -3 and r2.B(Fraction(3), Fraction(5)) == -5
    assert ab_eval(1, Fraction(7, 3), 11) == (1, 0)
    assert ab_eval(0, 2, 3) == (0, 1)


def test_recurrence_matches_sympy_remainder_symbolically():
    p, q = sp.symbols("p q")
    for n in range(0, 16):
        rem = sp.Poly(sp.rem(X ** n, X ** 2 + p * X + q, X), X)
        A = sp.expand(rem.coeff_monomial(X))
        B = sp.expand(rem.coeff_monomial(1))
        r = ab_symbolic(n)
        for pv, qv in ((Fraction(2, 3), Fraction(-5, 7)), (Fraction(-4), Fraction(9, 2))):
            sub = {p: sp.Rational(pv.numerator, pv.denominator),
                   q: sp.Rational(qv.numerator, qv.denominator)}
            assert r.A(pv, qv) == Fraction(str(A.subs(sub)))
            assert r.B(pv, qv) == Fraction(str(B.subs(sub)))


def test_recurrence_matches_division_n_le_50():
    rng = random.Random(1)
    for _ in range(20):
        p, q = _rand_rat(rng), _rand_rat(rng)
        for n in range(0, 51):
            r = poly_divrem(UniPoly.monomial(n), quadratic(p, q))[1]
            assert ab_eval(n, p, q) == (r.coeff(1), r.coeff(0))


@given(rats, rats, st.integers(1, 40))
def test_b_relation(p, q, n):
    assert ab_eval(n, p, q)[1] == -q * ab_eval(n - 1, p, q)[0]


@given(rats.filter(bool), rats, rats, st.integers(1, 30))
def test_scaling_law(t, p, q, n):
    assert ab_eval(n, t * p, t * t * q)[0] == t ** (n - 1) * ab_eval(n, p, q)[0]


def test_degree_formulas():
    for n in range(3, 41):
        A = ab_symbolic(n).A
        assert A.deg_p == n - 1
        assert A.deg_q == (n - 3) // 2 + 1


def test_special_value_pattern():
    assert all(ab_eval(4 * n, -2, 2)[0] == 0 for n in range(26))
    # 13 = 6*2 + 1, so A_13(3,3) = (-1)^2 3^6
    assert ab_eval(13, 3, 3)[0] == 729


def test_binet():
    assert all(binet_eval(n, 3, 2) == ab_eval(n, 3, 2)[0] for n in range(31))
    assert binet_eval(0, 5, 6) == 0
    with pytest.raises(ValueError, match="binet inapplicable"):
        binet_eval(4, -1, -1)
    with pytest.raises(ValueError):
        binet_eval(4, 2, 1)


def test_a_sequence():
    seq = a_sequence(20, Fraction(1, 2), 3)
    assert seq == [ab_eval(n, Fraction(1, 2), 3)[0] for n in range(21)]


def test_remainder_of_quadrinomial():
    assert remainder_of_quadrinomial(QuadrinomialSpec(5, 3, 1, -12), -1, 3) == (0, 0)
    assert remainder_of_quadrinomial(QuadrinomialSpec(6, 5, 4, 18), 3, 3) == (0, 0)
    assert remainder_of_quadrinomial(QuadrinomialSpec(4, 3, 1, 1), 0, 1) != (0, 0)


@given(st.integers(2, 12), st.integers(1, 10), st.integers(1, 9), rats, rats, rats)
def test_remainder_agrees_with_division(n, m, k, a, p, q):
    if not n > m > k:
        return
    spec = QuadrinomialSpec(n, m, k, a)
    A, B = remainder_of_quadrinomial(spec, p, q)
    r = poly_divrem(spec.poly(), quadratic(p, q))[1]
    assert (A, B) == (r.coeff(1), r.coeff(0))


def test_derive_a():
    assert derive_a(5, 3, 2, -2, 11) == -363
    assert derive_a(10, 6, 2, 0, -1) == -3
    assert derive_a(6, 2, 1, Fraction(1, 2), Fraction(3, 4)) == Fraction(51, 64)
    with pytest.raises(ValueError, match="no quadrinomial in this family"):
        derive_a(5, 3, 2, 1, 1)


def test_f_symbolic():
    assert f_symbolic(4, 2, 1) == BiPoly({(3, 0): -1, (1, 0): -1, (0, 0): 1, (1, 1): 2})
    for n in range(1, 12):
        for pv in (Fraction(3), Fraction(-2, 5)):
            assert ab_eval(n, pv, 0)[0] == (-pv) ** (n - 1)
    rng = random.Random(2)
    F = f_symbolic(5, 4, 3)
    for _ in range(50):
        pv, qv = _rand_rat(rng), _rand_rat(rng)
        assert F(pv, qv) == sum(ab_eval(e, pv, qv)[0] for e in (5, 4, 3))


def test_a_at_one():
    t = sp.Symbol("t")
    for n in range(0, 12):
        rem = sp.Poly(sp.rem(X ** n, X ** 2 + X + t, X), X)
        assert to_sympy(a_at_one(n), t).as_expr() == sp.expand(rem.coeff_monomial(X))
