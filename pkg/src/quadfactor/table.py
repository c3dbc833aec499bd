"""The shipped table of quadrinomials whose smallest rational factor has degree >= 3."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .arith import UniPoly, parse_poly, parse_rational, poly_divrem, rational_roots
from .arith.rational import format_rational
from .quadrem import QuadrinomialSpec
from .search import kronecker_factor, oracle_max_degree, quadratic_factors_of

ATTRIBUTIONS = ("paper", "Jankauskas", "Walsh")


@dataclass(frozen=True)
class TableRow:
    n: int
    m: int
    k: int
    a: Fraction
    min_degree_factor: UniPoly
    attribution: str

    @property
    def spec(self) -> QuadrinomialSpec:
        return QuadrinomialSpec(self.n, self.m, self.k, self.a)

    def label(self) -> str:
        return f"({self.n},{self.m},{self.k}, {format_rational(self.a)}) / {self.min_degree_factor.render()}"

    @classmethod
    def from_json(cls, d: dict) -> "TableRow":
        if d.get("attribution") not in ATTRIBUTIONS:
            raise ValueError(f"bad attribution {d.get('attribution')!r}")
        return cls(int(d["n"]), int(d["m"]), int(d["k"]), parse_rational(str(d["a"])),
                   parse_poly(d["min_degree_factor"]), d["attribution"])

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.k, "a": format_rational(self.a),
                "min_degree_factor": self.min_degree_factor.render(),
                "attribution": self.attribution}


def default_table_path():
    return resources.files("quadfactor") / "data" / "table.jsonl"


def load_table(path=None) -> list[TableRow]:
    if path is None:
        text = default_table_path().read_text()
    else:
        text = Path(path).read_text()
    return [TableRow.from_json(json.loads(line)) for line in text.splitlines() if line.strip()]


@dataclass
class RowReport:
    row: TableRow
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"row": self.row.to_json(), "passed": self.passed,
                "checks": dict(self.checks), "notes": list(self.notes)}


def verify_row(row: TableRow, use_oracle: bool = True) -> RowReport:
    """(i) factor divides, (ii) no rational root, (iii) no quadratic factor, (iv) oracle."""
    rep = RowReport(row)
    f = row.spec.poly()
    g = row.min_degree_factor
    rep.checks["divides"] = bool(g.degree) and poly_divrem(f, g)[1].is_zero()
    rep.checks["no_rational_root"] = not rational_roots(f)
    rep.checks["no_quadratic_factor"] = not quadratic_factors_of(row.spec)
    if not use_oracle:
        rep.notes.append("oracle disabled")
    elif f.degree > oracle_max_degree():
        rep.notes.append(f"oracle skipped: degree {f.degree} exceeds cap {oracle_max_degree()}")
    else:
        res = kronecker_factor(f, 2)
        rep.checks["oracle_min_degree_3"] = not res.found
        rep.notes.append(res.certificate())
    return rep


def verify_table(path=None, use_oracle: bool = True) -> list[RowReport]:
    return [verify_row(r, use_oracle) for r in load_table(path)]
