"""Acceptance checks, one per criterion.

Each check prints a single PASS/FAIL line.  Run ``python tests/test_acceptance.py``
for the summary alone, or collect it with pytest.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

from quadfactor.arith import UniPoly, parse_poly, poly_divrem
from quadfactor.arith.ntheory import is_rational_fourth_power
from quadfactor.curves import hxh_models, model_for, quadratic_factor_curve
from quadfactor.elliptic import E_1062, INFINITY, CurvePoint, ec_add, generate_reducible
from quadfactor.families import (DIV22_CASES, conjecture_Fmn_squarefree, deg4_family,
                                 deg10_family, div22_family, multiplicity_profile,
                                 prime_constant_irreducible, redquad_family, special_An)
from quadfactor.quadrem import QuadrinomialSpec, ab_eval, quadratic, remainder_of_quadrinomial
from quadfactor.search import quadratic_factors_of, search_points
from quadfactor.table import verify_table
from reference_values import (C_10_6_2, C_10_6_2_POINTS, DEG4_A, DEG4_COFACTORS, DEG4_Q, DEG6,
                              DEG6_54_A18, DEG6_54_A_BIG, DEG5, DEG7, DEG8_EVEN, DEG8_T,
                              E_10_6_2_POINTS, MODEL_RHS)


def _rr(rng, h=30):
    return Fraction(rng.randint(-h, h), rng.randint(1, h))


def c1():
    rng = random.Random(1)
    for _ in range(20):
        p, q = _rr(rng), _rr(rng)
        for n in range(51):
            r = poly_divrem(UniPoly.monomial(n), quadratic(p, q))[1]
            if ab_eval(n, p, q) != (r.coeff(1), r.coeff(0)):
                return False, f"mismatch at n={n}, p={p}, q={q}"
    return True, "1020 exact comparisons"


def c2():
    x, P = sp.symbols("x p")
    rng = random.Random(2)
    for m, k in ((2, 1), (3, 1), (3, 2)):
        lhs = (x ** 2 + P * x + sp.sympify(DEG4_Q[(m, k)])) * sp.sympify(DEG4_COFACTORS[(m, k)])
        diff = sp.together(lhs - (x ** 4 + x ** m + x ** k + sp.sympify(DEG4_A[(m, k)])))
        if sp.expand(sp.numer(diff)) != 0:
            return False, f"symbolic identity fails for {(m, k)}"
        done = 0
        while done < 100:
            p = _rr(rng)
            if p == 0 or p == Fraction(1, 2):
                continue
            w = deg4_family((m, k), p)
            if w.factor * w.cofactor != w.poly:
                return False, f"{(m, k)} p={p}"
            done += 1
    return True, "3 cases x 100 parameters, plus symbolic identities"


def c3():
    if quadratic_factors_of(QuadrinomialSpec(5, 3, 1, -12)) != [(-1, 3)]:
        return False, "(a) quadratic factors of x^5+x^3+x-12"
    a, f, g = DEG5["531"]
    f, g = parse_poly(f), parse_poly(g)
    if f * g != parse_poly("x^5 + x^3 + x - 12"):
        return False, "(a) factorization"
    ws = generate_reducible((5, 3, 2), 5)
    if not {Fraction(1), Fraction(6), Fraction(-363)} <= {w.spec.a for w in ws} or \
            not all(w.verify() for w in ws):
        return False, "(b) generate_reducible (5,3,2)"
    if quadratic_factors_of(QuadrinomialSpec(5, 4, 3, -1)) != [(0, 1)]:
        return False, "(c)"
    for m, k in ((2, 1), (4, 1)):
        if not search_points(quadratic_factor_curve(5, m, k), 100).empty:
            return False, f"(d) H_{{5,{m},{k}}} has a point"
    return True, "(d) no points up to height 100 on H_{5,2,1}, H_{5,4,1} (bounded evidence)"


def c4():
    count = 0
    for (m, k), items in DEG6.items():
        for a, fac in items:
            spec = QuadrinomialSpec(6, m, k, a)
            g = parse_poly(fac)
            if not poly_divrem(spec.poly(), g)[1].is_zero():
                return False, f"{fac} does not divide ({m},{k}, {a})"
            if (g.coeff(1), g.coeff(0)) not in quadratic_factors_of(spec):
                return False, f"quadratic_factors_of misses {fac}"
            count += 1
    ws = generate_reducible((6, 5, 4), 10)
    w18 = next((w for w in ws if w.spec.a == 18), None)
    if w18 is None or DEG6_54_A_BIG not in {w.spec.a for w in ws}:
        return False, "generate_reducible (6,5,4)"
    if (w18.factor, w18.cofactor) != tuple(parse_poly(s) for s in DEG6_54_A18):
        return False, "a = 18 factorization"
    return True, f"{count} listed pairs divide and are recovered; a = 18, -194481/512 generated"


def c5():
    names = ["H_{5,2,1}", "H_{5,3,1}", "H_{5,4,1}", "H_{5,3,2}", "H_{5,4,2}", "H_{5,4,3}",
             "H_{6,2,1}", "H_{6,3,1}", "H_{6,4,1}", "H_{6,5,1}", "H_{6,3,2}", "H_{6,5,2}",
             "H_{6,4,3}", "H_{6,5,3}", "H_{7,6,5}", "H_{8,7,6}", "H_{8,4,2}", "E_{8,6,2}",
             "E_{8,6,4}"]
    for name in names:
        n, m, k = (int(v) for v in name[2:].strip("{}").split(","))
        if name[0] == "E":
            M = hxh_models(n, m, k).models[1]
        elif n in (5, 6):
            M = model_for(n, m, k)
        elif n - m == m - k == 1:
            from quadfactor.curves import t_model
            M = t_model(n, 1)
        else:
            M = hxh_models(n, m, k).models[0]
        if list(M.rhs.coeffs) != [Fraction(c) for c in MODEL_RHS[name][1]]:
            return False, name
    C = hxh_models(10, 6, 2).models[0]
    if dict(C.poly.terms) != {k: Fraction(v) for k, v in C_10_6_2.items()}:
        return False, "C_{10,6,2}"
    return True, f"{len(names) + 1} models coefficient-exact"


def c6():
    for a, facs in DEG7:
        prod = UniPoly.const(1)
        for f in facs:
            prod = prod * parse_poly(f)
        if prod != QuadrinomialSpec(7, 6, 5, a).poly():
            return False, f"x^7+x^6+x^5+{a}"
    for a, fac in DEG8_T:
        if not poly_divrem(QuadrinomialSpec(8, 7, 6, a).poly(), parse_poly(fac))[1].is_zero():
            return False, f"n = 8, a = {a}"
    return True, "two degree-7 factorizations, three degree-8 divisions"


def c7():
    for (n, m, k), a, facs in DEG8_EVEN:
        if parse_poly(facs[0]) * parse_poly(facs[1]) != QuadrinomialSpec(n, m, k, a).poly():
            return False, f"({n},{m},{k}, {a})"
    M = hxh_models(8, 6, 2).models[1]
    for x, y in search_points(M, 100).points_found:
        for rec in M.recover(x, y):
            if rec.witness is not None and not rec.degenerate:
                return False, f"E_{{8,6,2}} point {(x, y)} gives a = {rec.witness.spec.a}"
    return True, "factorizations exact; E_{8,6,2} gives no a != 0 up to height 100 (bounded evidence)"


def c8():
    rng = random.Random(8)
    done = 0
    while done < 50:
        u = _rr(rng, 20)
        if u == 0:
            continue
        f = QuadrinomialSpec(10, 6, 2, -(u ** 5) - u ** 3 - u).poly()
        if not poly_divrem(f, UniPoly([-u, 0, 1]))[1].is_zero() or not deg10_family(u).verify():
            return False, f"u = {u}"
        done += 1
    pts = [INFINITY if p is None else CurvePoint(*p) for p in E_10_6_2_POINTS]
    for P in pts:
        if not E_1062.contains(P):
            return False, f"{P} not on E_{{10,6,2}}"
        for Q in pts:
            if ec_add(E_1062, P, Q) not in pts:
                return False, "E_{10,6,2} points not closed"
    C = hxh_models(10, 6, 2).models[0]
    if not all(C.contains(P, s) for P, s in C_10_6_2_POINTS):
        return False, "listed (P, s) not on C_{10,6,2}"
    if any(is_rational_fourth_power(P) for P, _ in C_10_6_2_POINTS if P != 0):
        return False, "a listed P is a fourth power"
    # P = 0 = 0^4 means p = 0, which forces q = r = 0, s = 1/2 and leaves 1 - s^2 + 2rt = 3/4
    p, q, r, s, t, a = sp.symbols("p q r s t a")
    eqs = [p ** 2 - 2 * q, 1 - q ** 2 + 2 * p * r - 2 * s, r ** 2 - 2 * q * s + 2 * p * t,
           a + t ** 2, 1 - s ** 2 + 2 * r * t]
    if sp.solve([e.subs(p, 0) for e in eqs], [q, r, s, t, a], dict=True):
        return False, "P = 0 admits a solution"
    return True, ("50 divisions, 8 torsion points closed, 7 listed points on C, "
                  "no nonzero P a fourth power, P = 0 infeasible")


def c9():
    for case in ((-2, 2), (2, 2), (3, 3)):
        for n in range(201):
            if special_An(case, n) != ab_eval(n, *case)[0]:
                return False, f"special_An {case} n={n}"
    count = 0
    for case in DIV22_CASES:
        for s in range(0 if case == "minus22" else 1, 21):
            for t in ([0] if case == "minus22" else range(s if case.endswith("_b") else 0, 21)):
                w = div22_family(case, s, t)
                if remainder_of_quadrinomial(w.spec, w.factor.coeff(1), w.factor.coeff(0)) != (0, 0):
                    return False, f"{case} s={s} t={t}"
                count += 1
    rng = random.Random(9)
    for _ in range(100):
        t, p, q, n = _rr(rng) or Fraction(1), _rr(rng), _rr(rng), rng.randint(1, 40)
        if ab_eval(n, t * p, t * t * q)[0] != t ** (n - 1) * ab_eval(n, p, q)[0]:
            return False, "scaling law"
    return True, f"special values n <= 200, {count} div22 witnesses, 100 scaling checks"


def c10():
    rng = random.Random(10)
    for _ in range(500):
        n = rng.randint(3, 12)
        m = rng.randint(2, n - 1)
        k = rng.randint(1, m - 1)
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 50))
        if multiplicity_profile(QuadrinomialSpec(n, m, k, a))[0] > 2:
            return False, f"multiplicity >= 3 at ({n},{m},{k}, {a})"
    for n in range(2, 21):
        for m in range(1, n):
            if not redquad_family(n, m).verify():
                return False, f"redquad ({n},{m})"
    reports = verify_table()
    bad = [r.row.label() for r in reports if not r.passed]
    if bad:
        return False, f"verify-table: {len(bad)}/{len(reports)} rows fail: " + "; ".join(bad)
    return True, f"500 specs, redquad n,m <= 20, {len(reports)} table rows"


def c11():
    count = 0
    for n in range(4, 8):
        for m in range(2, n):
            for k in range(1, m):
                if not prime_constant_irreducible(5, n, m, k):
                    return False, f"x^{n}+x^{m}+x^{k}+5"
                count += 1
    return True, f"{count} quadrinomials certified irreducible"


def c12():
    bad = [(m, n) for n in range(3, 21) for m in range(1, n) if n > 2 * m
           and not conjecture_Fmn_squarefree(m, n)]
    if bad:
        return True, "potential counterexamples (m, n): " + ", ".join(map(str, bad))
    return True, "F_{m,n} squarefree for all n <= 20"


CRITERIA = [
    (1, "recurrence correctness", c1),
    (2, "degree-4 families", c2),
    (3, "degree-5 results", c3),
    (4, "degree-6 results", c4),
    (5, "curve-model fidelity", c5),
    (6, "degree-7/8 t-family", c6),
    (7, "degree-8 even cases", c7),
    (8, "degree-10 family", c8),
    (9, "special-quadratic classification", c9),
    (10, "multiplicity corpus and table", c10),
    (11, "prime-constant irreducibility", c11),
    (12, "conjecture scan", c12),
]


def _line(num, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({name}): {detail}"


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(num, name, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
