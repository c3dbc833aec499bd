import json
from fractions import Fraction

import pytest
import sympy as sp

from conftest import X, from_sympy, to_sympy
from quadfactor.arith import parse_poly, poly_divrem
from quadfactor.table import ATTRIBUTIONS, TableRow, load_table, verify_row, verify_table

SIGN_ROW = (10, 4, 2, Fraction(-441, 4))


@pytest.fixture(scope="module")
def reports():
    return verify_table()


def test_table_shape():
    rows = load_table()
    assert len(rows) >= 40
    assert {r.attribution for r in rows} <= set(ATTRIBUTIONS)
    first = rows[0]
    assert (first.n, first.m, first.k, first.a) == (4, 3, 2, 4)
    for r in rows:
        assert TableRow.from_json(json.loads(json.dumps(r.to_json()))) == r


def test_every_row_passes(reports):
    failing = [r.row.label() for r in reports if not r.passed]
    assert failing == []


def test_only_the_sign_row_fails(reports):
    failing = [r for r in reports if not r.passed]
    assert [(r.row.n, r.row.m, r.row.k, r.row.a) for r in failing] == [SIGN_ROW]
    assert [k for k, v in failing[0].checks.items() if not v] == ["divides"]


def test_sign_row_against_sympy():
    # sympy factors x^10+x^4+x^2-441/4 with +21/2 where the row has -21/2
    _, facs = sp.factor_list(X ** 10 + X ** 4 + X ** 2 - sp.Rational(441, 4))
    monic = {from_sympy(sp.Poly(g, X).monic().as_expr()) for g, _ in facs}
    row = next(r for r in load_table() if (r.n, r.m, r.k, r.a) == SIGN_ROW)
    assert row.min_degree_factor not in monic
    assert parse_poly("x^5 - 2*x^4 + 2*x^3 + 3*x^2 - 8*x + 21/2") in monic


def test_factors_match_sympy_min_degree():
    for row in load_table():
        if (row.n, row.m, row.k, row.a) == SIGN_ROW:
            continue
        f = row.spec.poly()
        _, facs = sp.factor_list(to_sympy(f))
        assert min(g.degree() for g, _ in facs) == row.min_degree_factor.degree
        assert poly_divrem(f, row.min_degree_factor)[1].is_zero()


def test_oracle_notes(reports, monkeypatch):
    assert all(r.checks.get("oracle_min_degree_3", True) for r in reports)
    monkeypatch.setenv("QUADFACTOR_ORACLE_MAXDEG", "8")
    rep = verify_row(load_table()[-1])
    if rep.row.n > 8:
        assert any("oracle skipped" in n for n in rep.notes)
    rep = verify_row(load_table()[0], use_oracle=False)
    assert rep.notes == ["oracle disabled"]


def test_bad_attribution(tmp_path):
    p = tmp_path / "t.jsonl"
    p.write_text(json.dumps({"n": 4, "m": 3, "k": 2, "a": "4", "min_degree_factor": "x^4",
                             "attribution": "nobody"}) + "\n")
    with pytest.raises(ValueError):
        load_table(p)
