"""Division-verified factorization records shared by every generator."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import UniPoly, poly_divrem
from .arith.rational import format_rational
from .quadrem import QuadrinomialSpec


@dataclass(frozen=True, eq=False)
class FamilyWitness:
    """factor * cofactor = realized polynomial.

    ``spec`` is None only when the exponents collide, in which case ``realized``
    holds the polynomial that was factored.
    """

    spec: QuadrinomialSpec | None
    factor: UniPoly
    cofactor: UniPoly
    family_id: str
    parameters: dict = field(default_factory=dict)
    flags: tuple[str, ...] = ()
    realized: UniPoly | None = None

    @property
    def degenerate(self) -> bool:
        return self.spec is not None and self.spec.degenerate

    @property
    def poly(self) -> UniPoly:
        return self.spec.poly() if self.spec is not None else self.realized

    def verify(self) -> bool:
        return self.factor * self.cofactor == self.poly

    def to_json(self) -> dict:
        s = self.spec
        head = ({"n": s.n, "m": s.m, "k": s.k, "a": format_rational(s.a)} if s is not None
                else {"poly": self.realized.render()})
        return {
            **head,
            "factor_coeffs": [format_rational(c) for c in self.factor.coeffs],
            "cofactor_coeffs": [format_rational(c) for c in self.cofactor.coeffs],
            "factor": self.factor.render(),
            "cofactor": self.cofactor.render(),
            "family": self.family_id,
            "parameters": {k: _jsonable(v) for k, v in self.parameters.items()},
            "degenerate": self.degenerate,
            "flags": list(self.flags),
        }


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str)) or v is None:
        return v
    try:
        return format_rational(v)
    except (TypeError, ValueError):
        return str(v)


def make_witness(n: int, m: int, k: int, a, factor: UniPoly, family_id: str,
                 parameters: dict | None = None, flags=()) -> FamilyWitness:
    """Divide x^n+x^m+x^k+a by factor and package the result.

    Raises ArithmeticError if the division leaves a remainder.
    """
    spec = QuadrinomialSpec(n, m, k, a)
    cofactor, rem = poly_divrem(spec.poly(), factor)
    if not rem.is_zero():
        raise ArithmeticError(f"{factor.render()} does not divide {spec.poly().render()}")
    flags = tuple(flags)
    if spec.degenerate and "a=0" not in flags:
        flags += ("a=0",)
    return FamilyWitness(spec, factor, cofactor, family_id, dict(parameters or {}), flags)
