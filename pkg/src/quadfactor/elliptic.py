"""Elliptic curves in long Weierstrass form and the maps that feed curve points
into the quadratic-factor models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arith import BiPoly, to_rational
from .arith.ntheory import rational_sqrt
from .arith.rational import format_rational
from .arith.series import limit_along_curve
from .curves import HyperellipticModel, quadratic_factor_curve, square_content_cases
from .witness import FamilyWitness


@dataclass(frozen=True)
class CurvePoint:
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", to_rational(self.x))
            object.__setattr__(self, "y", to_rational(self.y))

    def __repr__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({format_rational(self.x)}, {format_rational(self.y)})"

    def to_json(self):
        if self.is_infinity:
            return "O"
        return [format_rational(self.x), format_rational(self.y)]


INFINITY = CurvePoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.discriminant == 0:
            raise ValueError("singular curve")

    @classmethod
    def from_list(cls, coeffs) -> "WeierstrassCurve":
        return cls(*coeffs)

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> tuple[Fraction, ...]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def c4(self) -> Fraction:
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    @property
    def c6(self) -> Fraction:
        b2, b4, b6, _ = self.b_invariants
        return -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    @property
    def j_invariant(self) -> Fraction:
        return self.c4 ** 3 / self.discriminant

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        return y * y + self.a1 * x * y + self.a3 * y == x ** 3 + self.a2 * x * x + self.a4 * x + self.a6

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(x, y)
        if not self.contains(P):
            raise ValueError(f"{P} is not on the curve")
        return P

    def as_bipoly(self) -> BiPoly:
        X = BiPoly.var(0, ("X", "Y"))
        Y = BiPoly.var(1, ("X", "Y"))
        return (Y * Y + X * Y * self.a1 + Y * self.a3
                - X * X * X - X * X * self.a2 - X * self.a4 - self.a6)

    def render(self) -> str:
        lhs = BiPoly({(0, 2): 1, (1, 1): self.a1, (0, 1): self.a3}, ("X", "Y")).render()
        rhs = BiPoly({(3, 0): 1, (2, 0): self.a2, (1, 0): self.a4, (0, 0): self.a6},
                     ("X", "Y")).render()
        return f"{lhs} = {rhs}"


def ec_neg(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    if not E.contains(P):
        raise ValueError("point is not on the curve")
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y - E.a1 * P.x - E.a3)


def ec_add(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if not (E.contains(P) and E.contains(Q)):
        raise ValueError("point is not on the curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.ainvs
    if P.x == Q.x:
        if P.y + Q.y + a1 * Q.x + a3 == 0:
            return INFINITY
        lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / (2 * P.y + a1 * P.x + a3)
        nu = (-P.x ** 3 + a4 * P.x + 2 * a6 - a3 * P.y) / (2 * P.y + a1 * P.x + a3)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
        nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x)
    x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def ec_mul(E: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    if not E.contains(P):
        raise ValueError("point is not on the curve")
    if n < 0:
        return ec_mul(E, -n, ec_neg(E, P))
    out = INFINITY
    base = P
    while n:
        if n & 1:
            out = ec_add(E, out, base)
        base = ec_add(E, base, base)
        n >>= 1
    return out


def certify_infinite_order(E: WeierstrassCurve, P: CurvePoint) -> bool:
    """True iff nP != O for 1 <= n <= 12; rational torsion never exceeds order 12."""
    if not E.contains(P):
        raise ValueError("point is not on the curve")
    Q = P
    for _ in range(12):
        if Q.is_infinity:
            return False
        Q = ec_add(E, Q, P)
    return True


# isomorphisms x = u^2 x' + r, y = u^3 y' + s u^2 x' + t


@dataclass(frozen=True)
class Isomorphism:
    source: WeierstrassCurve
    target: WeierstrassCurve
    u: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __call__(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        x2 = (P.x - self.r) / self.u ** 2
        y2 = (P.y - self.s * self.u ** 2 * x2 - self.t) / self.u ** 3
        return self.target.point(x2, y2)

    def inverse(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        x = self.u ** 2 * P.x + self.r
        y = self.u ** 3 * P.y + self.s * self.u ** 2 * P.x + self.t
        return self.source.point(x, y)


def _transform(E: WeierstrassCurve, u, r, s, t) -> tuple[Fraction, ...]:
    a1, a2, a3, a4, a6 = E.ainvs
    return (
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u ** 2,
        (a3 + r * a1 + 2 * t) / u ** 3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4,
        (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6,
    )


def find_isomorphism(E: WeierstrassCurve, F: WeierstrassCurve) -> Isomorphism | None:
    """A rational change of variables taking E to F, if one exists."""
    if E.j_invariant != F.j_invariant:
        return None
    candidates = []
    if E.c6 != 0 and E.c4 != 0:
        u2 = (E.c6 * F.c4) / (E.c4 * F.c6)
        u = rational_sqrt(u2)
        if u is not None:
            candidates = [u, -u]
    elif E.c4 == 0:
        r6 = E.c6 / F.c6
        for u in _rational_roots_of_power(r6, 6):
            candidates.append(u)
    else:
        for u in _rational_roots_of_power(E.c4 / F.c4, 4):
            candidates.append(u)
    for u in candidates:
        if u ** 4 * F.c4 != E.c4 or u ** 6 * F.c6 != E.c6:
            continue
        s = (u * F.a1 - E.a1) / 2
        r = (u * u * F.a2 - E.a2 + s * E.a1 + s * s) / 3
        t = (u ** 3 * F.a3 - E.a3 - r * E.a1) / 2
        if _transform(E, u, r, s, t) == F.ainvs:
            return Isomorphism(E, F, u, r, s, t)
    return None


def _rational_roots_of_power(x: Fraction, e: int) -> list[Fraction]:
    from .curves import _rational_root
    return _rational_root(x, e)


# named curves and the maps into the quadratic-factor models

E_531 = WeierstrassCurve(0, -1, 0, 4, 0)
E_532 = WeierstrassCurve(0, -1, 1, -1, 1)
E_543 = WeierstrassCurve(0, 0, 1, 0, 0)
E_654 = WeierstrassCurve(1, -1, 1, -2, 0)
E_1062 = WeierstrassCurve(0, 1, 0, -24, 36)
E_864 = WeierstrassCurve(0, -1, 0, 1, 0)


def phi_531(P: CurvePoint) -> tuple[Fraction, Fraction]:
    """E_531 -> s^2 = (p^2+1)(5p^2-3)."""
    if not E_531.contains(P):
        raise ValueError("point is not on the curve")
    if P.is_infinity:
        raise ValueError("maps to infinity of H")
    X, Y = P.x, P.y
    den = 3 * X - Y - 4
    if den == 0:
        raise ValueError("maps to infinity of H")
    return (X + 4 - Y) / den, 2 * (X ** 3 - 12 * X * X + 4 * X + 16 * Y - 16) / den ** 2


def _phi_532_polys():
    names = ("X", "Y")
    X = BiPoly.var(0, names)
    Y = BiPoly.var(1, names)
    den = Y - X + 1
    return X - 1, den, Y + X * X * X - X * X * 3 + X * 3 - 1, den * den


def phi_532(P: CurvePoint) -> tuple[Fraction, Fraction]:
    """E_532 -> s^2 = 5p^4+2p^2+4p+1; a common zero of numerator and denominator
    is resolved by taking the limit along the curve."""
    if not E_532.contains(P):
        raise ValueError("point is not on the curve")
    if P.is_infinity:
        raise ValueError("maps to infinity of H")
    pn, pd, sn, sd = _phi_532_polys()
    curve = E_532.as_bipoly()
    try:
        return (limit_along_curve(pn, pd, curve, (P.x, P.y)),
                limit_along_curve(sn, sd, curve, (P.x, P.y)))
    except ZeroDivisionError:
        raise ValueError("maps to infinity of H") from None


class QuarticTransport:
    """Birational map between v^2 = quartic(p) with a rational point (p0, v0), v0 != 0,
    and a long Weierstrass cubic.

    After p = p0 + z the quartic reads e4 z^4 + e3 z^3 + e2 z^2 + e1 z + v0^2, and
    X = (2 v0 (v + v0) + e1 z) / z^2,
    Y = (4 v0^2 (v + v0) + 2 v0 (e1 z + e2 z^2) - e1^2 z^2 / (2 v0)) / z^3.
    """

    def __init__(self, model: HyperellipticModel, base_point):
        if model.rhs.degree != 4:
            raise ValueError("transport needs a quartic right-hand side")
        p0, v0 = (to_rational(c) for c in base_point)
        if not model.contains(p0, v0):
            raise ValueError("base point is not on the model")
        if v0 == 0:
            raise ValueError("base point must have nonzero ordinate")
        from .arith import UniPoly
        shifted = model.rhs.compose(UniPoly([p0, 1]))
        e0, e1, e2, e3, e4 = shifted.coeffs
        self.model, self.p0, self.v0 = model, p0, v0
        self.e = (e0, e1, e2, e3, e4)
        q = v0
        a2 = e2 - e1 * e1 / (4 * q * q)
        a4 = -4 * q * q * e4
        self.curve = WeierstrassCurve(e1 / q, a2, 2 * q * e3, a4, a2 * a4)

    def to_curve(self, p, v) -> CurvePoint:
        p, v = to_rational(p), to_rational(v)
        if not self.model.contains(p, v):
            raise ValueError("point is not on the model")
        _, e1, e2, _, _ = self.e
        q = self.v0
        z = p - self.p0
        if z == 0:
            if v == q:
                return INFINITY
            # (p0, -v0) lies over X = e1^2/(4 v0^2) - e2
            for P in self._points_over(e1 * e1 / (4 * q * q) - e2):
                if self.from_curve(P) in (None, (p, v)):
                    return P
            raise AssertionError("opposite base point has no image")
        X = (2 * q * (v + q) + e1 * z) / z ** 2
        Y = (4 * q * q * (v + q) + 2 * q * (e1 * z + e2 * z * z) - e1 * e1 * z * z / (2 * q)) / z ** 3
        return self.curve.point(X, Y)

    def _points_over(self, X) -> list[CurvePoint]:
        a1, a2, a3, a4, a6 = self.curve.ainvs
        b = a1 * X + a3
        c = -(X ** 3 + a2 * X * X + a4 * X + a6)
        disc = b * b - 4 * c
        r = rational_sqrt(disc)
        if r is None:
            return []
        return [CurvePoint(X, (-b + sg) / 2) for sg in {r, -r}]

    def from_curve(self, P: CurvePoint):
        """(p, v) on the model, or None when P lies over the base point itself."""
        if not self.curve.contains(P):
            raise ValueError("point is not on the curve")
        if P.is_infinity:
            return (self.p0, self.v0)
        _, e1, e2, _, _ = self.e
        q = self.v0
        if P.y == 0:
            return None
        z = (2 * q * (P.x + e2) - e1 * e1 / (2 * q)) / P.y
        v = -q + z * (z * P.x - e1) / (2 * q)
        p = self.p0 + z
        if not self.model.contains(p, v):
            raise AssertionError("transport does not land on the model")
        return (p, v)


def quartic_point_transport(model: HyperellipticModel, base_point,
                            target: WeierstrassCurve | None = None,
                            generator: CurvePoint | None = None,
                            count: int = 10) -> Iterator[tuple[int, Fraction, Fraction]]:
    """Stream (n, p, s) for the multiples nP, n = 1, -1, 2, -2, ... of a generator.

    With target and generator given, the generator lives on target and is carried over
    by an isomorphism; otherwise it must lie on the transport's own cubic.
    """
    tr = QuarticTransport(model, base_point)
    iso = None
    curve = tr.curve
    if target is not None:
        iso = find_isomorphism(target, tr.curve)
        if iso is None:
            raise ValueError("target curve is not isomorphic to the transported cubic")
        curve = target
    if generator is None:
        raise ValueError("a generator point is required")
    for n in _walk(count):
        Q = ec_mul(curve, n, generator)
        if iso is not None:
            Q = iso(Q)
        img = tr.from_curve(Q)
        if img is None:
            continue
        yield n, img[0], img[1]


def _walk(count: int):
    for i in range(1, count + 1):
        yield i
        yield -i


@dataclass(frozen=True)
class EllipticFamily:
    key: tuple[int, int, int]
    curve: WeierstrassCurve
    generator: CurvePoint
    model: HyperellipticModel


def _families() -> dict:
    return {
        (5, 3, 1): EllipticFamily((5, 3, 1), E_531, CurvePoint(1, 2), quadratic_factor_curve(5, 3, 1)),
        (5, 3, 2): EllipticFamily((5, 3, 2), E_532, CurvePoint(1, 0), quadratic_factor_curve(5, 3, 2)),
        (6, 5, 4): EllipticFamily((6, 5, 4), E_654, CurvePoint(0, 0), square_content_cases(6, 5, 4)[1]),
    }


def _points_for(fam: EllipticFamily, steps: int):
    """(n, p, s) images of nP in walk order."""
    if fam.key == (6, 5, 4):
        yield from quartic_point_transport(fam.model, (0, 2), fam.curve, fam.generator, steps)
        return
    phi = phi_531 if fam.key == (5, 3, 1) else phi_532
    for n in _walk(steps):
        Q = ec_mul(fam.curve, n, fam.generator)
        try:
            p, s = phi(Q)
        except ValueError:
            continue
        yield n, p, s


def generate_reducible(family, count: int, max_steps: int | None = None) -> list[FamilyWitness]:
    """Division-verified factorizations from multiples of the family's generator.

    Degenerate images are skipped; a values are distinct and nonzero.
    """
    family = tuple(family)
    fams = _families()
    if family not in fams:
        raise ValueError(f"unknown family {family}")
    if count < 1:
        raise ValueError("count must be positive")
    fam = fams[family]
    steps = max_steps or (2 * count + 4)
    out: list[FamilyWitness] = []
    seen = set()
    for n, p, s in _points_for(fam, steps):
        if not fam.model.contains(p, s):
            raise AssertionError("image point is not on the model")
        for rec in fam.model.recover(p, s):
            w = rec.witness
            if w is None or w.degenerate or w.spec.a in seen:
                continue
            seen.add(w.spec.a)
            params = dict(w.parameters)
            params.update({"multiple": n, "p": p, "s": s})
            out.append(FamilyWitness(w.spec, w.factor, w.cofactor, f"E_{{{family[0]},{family[1]},{family[2]}}}",
                                     params, w.flags))
            if len(out) >= count:
                return out
    return out


def witness_json(w: FamilyWitness) -> dict:
    d = w.to_json()
    d["source_point"] = {"multiple": w.parameters.get("multiple"),
                         "p": format_rational(w.parameters["p"]),
                         "s": format_rational(w.parameters["s"])}
    return d
