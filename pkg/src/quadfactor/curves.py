"""Curve models attached to the divisibility condition F_{n,m,k}(p, q) = 0.

Every model carries a back-substitution object that turns a rational point
into division-verified factorizations (or a tagged degenerate record), so
points found by search can be checked end to end.

Normalization used throughout: a q-quadratic c2 q^2 + c1 q + c0 = 0 becomes
(2 c2 q + c1)^2 = c1^2 - 4 c2 c0, and the square factor c^2 S(p)^2 of the
discriminant (c an integer, S a primitive polynomial) is divided out and kept
in ``removed_content``.  The relation is then 2 c2 q + c1 = +-c S(p) s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .arith import BiPoly, UniPoly, rational_roots, squarefree_decomposition, to_rational
from .arith.mpoly import MPoly
from .arith.ntheory import square_part
from .arith.rational import format_rational
from .quadrem import a_at_one, derive_a, f_symbolic, quadratic
from .witness import FamilyWitness, make_witness


@dataclass(frozen=True)
class Recovery:
    """Outcome of back-substituting one curve point."""

    point: tuple
    values: dict
    witness: FamilyWitness | None
    note: str = ""

    @property
    def degenerate(self) -> bool:
        return self.witness is None or self.witness.degenerate


def _signs(value):
    return [value] if value == 0 else [value, -value]


def _rational_root(x: Fraction, e: int) -> list[Fraction]:
    """All rational e-th roots of x."""
    x = Fraction(x)
    if e == 1:
        return [x]
    if x == 0:
        return [Fraction(0)]
    from gmpy2 import iroot
    sign = 1
    if x < 0:
        if e % 2 == 0:
            return []
        sign, x = -1, -x
    u, ok1 = iroot(x.numerator, e)
    v, ok2 = iroot(x.denominator, e)
    if not (ok1 and ok2):
        return []
    r = Fraction(sign * int(u), int(v))
    return [r, -r] if e % 2 == 0 else [r]


def _quadratic_recovery(n, m, k, p, q, family_id, point, extra=None) -> Recovery:
    values = {"p": p, "q": q}
    if extra:
        values.update(extra)
    a = derive_a(n, m, k, p, q)
    w = make_witness(n, m, k, a, quadratic(p, q), family_id, values)
    return Recovery(point, values | {"a": a}, w, "a = 0" if a == 0 else "")


# back-substitution objects


@dataclass(frozen=True)
class QuadraticInQBackSub:
    """2 c2(p) q + c1(p) = +-scale(p) s, with F = c2 q^2 + c1 q + c0 up to a power of p."""

    n: int
    m: int
    k: int
    c2: UniPoly
    c1: UniPoly
    scale: UniPoly

    def describe(self) -> str:
        return (f"+-({self.scale.render('p')})*s = 2*({self.c2.render('p')})*q"
                f" + ({self.c1.render('p')})")

    def to_json(self) -> dict:
        return {"kind": "quadratic_in_q", "relation": self.describe(),
                "q": f"(+-({self.scale.render('p')})*s - ({self.c1.render('p')}))"
                     f"/(2*({self.c2.render('p')}))"}

    def recover(self, p, s) -> list[Recovery]:
        p, s = to_rational(p), to_rational(s)
        fam = f"H_{{{self.n},{self.m},{self.k}}}"
        den = 2 * self.c2(p)
        if den == 0 or self.scale(p) == 0:
            F = f_symbolic(self.n, self.m, self.k).specialize_p(p)
            if F.is_zero():
                return [Recovery((p, s), {"p": p}, None, "F vanishes for every q at this p")]
            qs = [r for r, _ in rational_roots(F)] if F.degree else []
            if not qs:
                return [Recovery((p, s), {"p": p}, None,
                                 "no finite q: back-substitution divides by zero")]
        else:
            qs = sorted({(sg - self.c1(p)) / den for sg in _signs(self.scale(p) * s)})
        return [_quadratic_recovery(self.n, self.m, self.k, p, q, fam, (p, s)) for q in qs]


@dataclass(frozen=True)
class TModelBackSub:
    """P = p^m from 2 A_n(1,t) P + A_{n-m}(1,t) = +-s, then q = t p^2."""

    n: int
    m: int

    def describe(self) -> str:
        return (f"+-s = 2*A_{self.n}(1,t)*p^{self.m} + A_{self.n - self.m}(1,t), q = t*p^2")

    def to_json(self) -> dict:
        return {"kind": "t_model", "relation": self.describe()}

    def recover(self, t, s) -> list[Recovery]:
        t, s = to_rational(t), to_rational(s)
        n, m = self.n, self.m
        An, Anm, An2m = a_at_one(n)(t), a_at_one(n - m)(t), a_at_one(n - 2 * m)(t)
        if An != 0:
            Ps = {(sg - Anm) / (2 * An) for sg in _signs(s)}
        elif Anm != 0:
            Ps = {-An2m / Anm}
        else:
            return [Recovery((t, s), {"t": t}, None, "all coefficients vanish at this t")]
        out = []
        fam = f"H_{{{n},{n - m},{n - 2 * m}}}"
        for P in sorted(Ps):
            roots = _rational_root(P, m)
            if not roots:
                out.append(Recovery((t, s), {"t": t, "P": P}, None,
                                    f"P is not a rational {m}-th power"))
            for p in roots:
                if p == 0:
                    out.append(Recovery((t, s), {"t": t, "p": p}, None,
                                        "p = 0: factor x^2, a = 0"))
                    continue
                out.append(_quadratic_recovery(n, n - m, n - 2 * m, p, t * p * p, fam,
                                               (t, s), {"t": t}))
        return out


@dataclass(frozen=True)
class PowerBackSub:
    """X = p^power, Y = y_scale * v, then delegate."""

    inner: object
    power: int
    y_scale: Fraction = Fraction(1)

    def describe(self) -> str:
        return f"p^{self.power} = X, v = {format_rational(self.y_scale)}*Y; then " + self.inner.describe()

    def to_json(self) -> dict:
        return {"kind": "power", "power": self.power, "y_scale": format_rational(self.y_scale),
                "inner": self.inner.to_json()}

    def recover(self, X, Y) -> list[Recovery]:
        X, Y = to_rational(X), to_rational(Y)
        roots = _rational_root(X, self.power)
        if not roots:
            return [Recovery((X, Y), {"X": X}, None,
                             f"X is not a rational {self.power}-th power")]
        out = []
        for p in roots:
            for r in self.inner.recover(p, self.y_scale * Y):
                out.append(Recovery((X, Y), r.values, r.witness, r.note))
        return out


# models


@dataclass(frozen=True)
class HyperellipticModel:
    name: str
    variable: str
    lhs_variable: str
    rhs: UniPoly
    back_sub: object
    provenance: tuple
    removed_content: UniPoly = field(default_factory=lambda: UniPoly.const(1))

    def contains(self, x, y) -> bool:
        return to_rational(y) ** 2 == self.rhs(to_rational(x))

    def render(self) -> str:
        return f"{self.lhs_variable}^2 = {self.rhs.render(self.variable)}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "variable": self.variable,
            "lhs_variable": self.lhs_variable,
            "rhs_coefficients": [format_rational(c) for c in self.rhs.coeffs],
            "rhs": self.rhs.render(self.variable),
            "back_sub": self.back_sub.to_json() if self.back_sub else None,
            "removed_content": self.removed_content.render(self.variable),
            "provenance": list(self.provenance),
        }

    def recover(self, x, y) -> list[Recovery]:
        if not self.contains(x, y):
            raise ValueError("point is not on the model")
        if self.back_sub is None:
            return []
        return self.back_sub.recover(x, y)


@dataclass(frozen=True)
class PlaneCurve:
    """An affine plane curve G(x, y) = 0 that is not in hyperelliptic shape."""

    name: str
    poly: BiPoly
    provenance: tuple
    back_sub: object = None

    @property
    def variables(self) -> tuple[str, str]:
        return self.poly.names

    def contains(self, x, y) -> bool:
        return self.poly(to_rational(x), to_rational(y)) == 0

    def render(self) -> str:
        return f"{self.poly.render()} = 0"

    def to_json(self) -> dict:
        return {"name": self.name, "variables": list(self.poly.names),
                "equation": self.render(),
                "terms": [[i, j, format_rational(c)] for (i, j), c in sorted(self.poly.terms.items())],
                "back_sub": self.back_sub.to_json() if self.back_sub else None,
                "provenance": list(self.provenance)}

    def recover(self, x, y) -> list[Recovery]:
        if not self.contains(x, y):
            raise ValueError("point is not on the curve")
        return self.back_sub.recover(x, y) if self.back_sub else []


@dataclass(frozen=True)
class CoefficientSystem:
    unknowns: tuple[str, ...]
    equations: tuple[MPoly, ...]
    origin: str
    shape: dict = field(default_factory=dict)

    def residuals(self, solution: dict) -> list[Fraction]:
        return [e.evaluate(solution) for e in self.equations]

    def is_solution(self, solution: dict) -> bool:
        return all(r == 0 for r in self.residuals(solution))

    def render(self) -> list[str]:
        return [f"{e.render()} = 0" for e in self.equations]

    def to_json(self) -> dict:
        return {"origin": self.origin, "unknowns": list(self.unknowns),
                "equations": self.render()}


# completing the square


def _p_valuation(F: BiPoly) -> int:
    return min((i for i, _ in F.terms), default=0)


def _integral(F: BiPoly) -> BiPoly:
    d = 1
    for c in F.terms.values():
        d = lcm(d, c.denominator)
    return F * d


@dataclass(frozen=True)
class _Square:
    c2: UniPoly
    c1: UniPoly
    c0: UniPoly
    rhs: UniPoly
    c: int
    S: UniPoly


def _square_split(disc: UniPoly) -> tuple[int, UniPoly, UniPoly]:
    """disc = c^2 S^2 rhs with S primitive and rhs free of integer square content."""
    if disc.is_zero():
        raise ValueError("discriminant vanishes identically")
    S = UniPoly.const(1)
    for g, mult in squarefree_decomposition(disc):
        if mult >= 2:
            S = S * g ** (mult // 2)
    S = S.primitive()
    R = disc // (S * S)
    ints = R.integer_coeffs()
    scale = R.denominator_lcm()
    if scale != 1:
        raise AssertionError("discriminant quotient is not integral")
    g = 0
    for c in ints:
        g = gcd(g, c)
    c = square_part(g)
    return c, S, R.scale(Fraction(1, c * c))


def _complete_square(F: BiPoly) -> _Square:
    F = _integral(F)
    cs = F.coeffs_in_q()
    if len(cs) != 3:
        raise ValueError("not a quadratic-in-q case")
    c0, c1, c2 = cs
    disc = c1 * c1 - c2 * c0 * 4
    c, S, rhs = _square_split(disc)
    return _Square(c2, c1, c0, rhs, c, S)


def _strip_p_power(F: BiPoly) -> tuple[BiPoly, int]:
    e = _p_valuation(F)
    return BiPoly({(i - e, j): c for (i, j), c in F.terms.items()}, F.names), e


_SQUARE_CONTENT = {(6, 4, 2), (6, 5, 4)}


def _quadratic_model(n, m, k) -> HyperellipticModel:
    F, _ = _strip_p_power(f_symbolic(n, m, k))
    if F.deg_q != 2:
        raise ValueError("not a quadratic-in-q case")
    sq = _complete_square(F)
    scale = sq.S * sq.c
    back = QuadraticInQBackSub(n, m, k, sq.c2, sq.c1, scale)
    return HyperellipticModel(f"H_{{{n},{m},{k}}}", "p", "s", sq.rhs, back,
                              (n, m, k, "quadratic factor"), sq.S * sq.S * (sq.c * sq.c))


def quadratic_factor_curve(n: int, m: int, k: int) -> HyperellipticModel:
    """The model s^2 = disc_q(F_{n,m,k}) for a quadratic factor x^2+px+q."""
    if not n > m > k >= 1:
        raise ValueError(f"need n > m > k >= 1, got ({n}, {m}, {k})")
    if (n, m, k) in _SQUARE_CONTENT:
        raise ValueError("not a quadratic-in-q case (use square_content_cases)")
    return _quadratic_model(n, m, k)


@dataclass(frozen=True)
class PZeroBranch:
    """What happens on the line p = 0 of F_{n,m,k}."""

    description: str
    family: object = None
    q_values: tuple = ()

    def to_json(self) -> dict:
        return {"description": self.description,
                "q_values": [format_rational(q) for q in self.q_values]}


def _q_cubic_family(q) -> FamilyWitness:
    q = to_rational(q)
    a = q ** 3 - q ** 2 + q
    return make_witness(6, 4, 2, a, quadratic(0, q), "F_{6,4,2} p=0", {"q": q})


def square_content_cases(n: int, m: int, k: int) -> tuple[PZeroBranch, HyperellipticModel]:
    """The two sextic cases where a square factor in p must be removed first.

    Returns the p = 0 branch and the residual model.
    """
    if (n, m, k) not in _SQUARE_CONTENT:
        raise ValueError(f"({n}, {m}, {k}) is not a square-content case")
    model = _quadratic_model(n, m, k)
    F = f_symbolic(n, m, k)
    line = F.specialize_p(0)
    if line.is_zero():
        branch = PZeroBranch("F vanishes on p = 0: a = q^3 - q^2 + q with factor x^2 + q",
                             _q_cubic_family)
    else:
        qs = tuple(r for r, _ in rational_roots(line))
        branch = PZeroBranch("p = 0 forces q in " + ", ".join(map(format_rational, qs))
                             + " (back-substitution divides by p)", None, qs)
    return branch, model


def t_model(n: int, m: int) -> HyperellipticModel:
    """s^2 = A_{n-m}(1,t)^2 - 4 A_{n-2m}(1,t) A_n(1,t) for x^n+x^{n-m}+x^{n-2m}+a."""
    if not isinstance(n, int) or not isinstance(m, int) or m < 1 or n <= 2 * m:
        raise ValueError("t-model requires n > 2m and m >= 1")
    rhs = t_model_rhs(n, m)
    return HyperellipticModel(f"H_{{{n},{n - m},{n - 2 * m}}}", "t", "s", rhs,
                              TModelBackSub(n, m), (n, n - m, n - 2 * m, "t-model"))


def t_model_rhs(n: int, m: int) -> UniPoly:
    An, Anm, An2m = a_at_one(n), a_at_one(n - m), a_at_one(n - 2 * m)
    return Anm * Anm - An2m * An * 4


def t_model_infinity(n: int, m: int) -> list[Recovery]:
    """Factors with p = 0, q != 0, which the substitution q = t p^2 misses."""
    F = f_symbolic(n, n - m, n - 2 * m).specialize_p(0)
    out = []
    if F.is_zero():
        return out
    for q, _ in rational_roots(F):
        if q != 0:
            out.append(_quadratic_recovery(n, n - m, n - 2 * m, Fraction(0), q,
                                           f"H_{{{n},{n - m},{n - 2 * m}}} infinity", ("inf",)))
    return out


# h(x) h(-x) systems

_HXH_NAMES = {3: ("u", "v", "w"), 4: ("p", "q", "r", "s"), 5: ("p", "q", "r", "s", "t")}


def hxh_system(n: int, m: int, k: int) -> CoefficientSystem:
    """Coefficient equations for x^n+x^m+x^k+a = (-1)^d h(x) h(-x), d = n/2, h monic."""
    if not n > m > k >= 1:
        raise ValueError(f"need n > m > k >= 1, got ({n}, {m}, {k})")
    if n % 2 or m % 2 or k % 2:
        raise ValueError("h(x)h(-x) systems need even exponents")
    d = n // 2
    if d not in _HXH_NAMES:
        raise ValueError("h(x)h(-x) systems are supported for n in {6, 8, 10}")
    coeff_names = _HXH_NAMES[d]
    names = coeff_names + ("a",)
    # c[i] is the coefficient of x^i in h
    c = {d: MPoly.const(names, 1)}
    for idx, nm in enumerate(coeff_names):
        c[d - 1 - idx] = MPoly.var(names, nm)
    # h(x) h(-x) = E(y)^2 - y O(y)^2, y = x^2
    E = {i // 2: c[i] for i in c if i % 2 == 0}
    O = {i // 2: c[i] for i in c if i % 2 == 1}
    prod: dict[int, MPoly] = {}
    for i, x in E.items():
        for j, y in E.items():
            prod[i + j] = prod.get(i + j, MPoly(names)) + x * y
    for i, x in O.items():
        for j, y in O.items():
            prod[i + j + 1] = prod.get(i + j + 1, MPoly(names)) - x * y
    sign = -1 if d % 2 else 1
    target = {d: 1, m // 2: 1, k // 2: 1}
    eqs = []
    for j in range(d - 1, -1, -1):
        lhs = MPoly.const(names, target.get(j, 0))
        if j == 0:
            lhs = lhs + MPoly.var(names, "a")
        eqs.append(lhs - prod.get(j, MPoly(names)) * sign)
    return CoefficientSystem(names, tuple(eqs), "h(x)h(-x)",
                             {"n": n, "m": m, "k": k, "d": d, "sign": sign,
                              "coefficients": coeff_names})


def _solve_linear(eq: MPoly, name: str) -> MPoly:
    if eq.degree_in(name) != 1:
        raise ValueError(f"equation is not linear in {name}")
    lead = eq.coeff_of(name, 1)
    rest = eq.coeff_of(name, 0)
    if not lead.is_monomial():
        raise ValueError(f"coefficient of {name} is not a monomial")
    return (-rest).divide_by_monomial(lead)


@dataclass(frozen=True)
class HxhReduction:
    system: CoefficientSystem
    solved: dict            # name -> MPoly in (first coefficient, free coefficient)
    a_expr: MPoly
    free: tuple[str, ...]   # (first coefficient, remaining free coefficient or none)
    residual: BiPoly | None

    def h_from(self, values: dict) -> UniPoly:
        d = self.system.shape["d"]
        names = self.system.shape["coefficients"]
        full = dict(values)
        for nm, expr in self.solved.items():
            full[nm] = expr.evaluate(full)
        c = [Fraction(0)] * (d + 1)
        c[d] = Fraction(1)
        for idx, nm in enumerate(names):
            c[d - 1 - idx] = to_rational(full[nm])
        return UniPoly(c)

    def witness(self, values: dict, family_id: str) -> FamilyWitness:
        sh = self.system.shape
        h = self.h_from(values)
        full = dict(values)
        for nm, expr in self.solved.items():
            full[nm] = expr.evaluate(full)
        a = self.a_expr.evaluate(full)
        w = make_witness(sh["n"], sh["m"], sh["k"], a, h, family_id,
                         {nm: full[nm] for nm in sh["coefficients"]})
        if w.cofactor != h.reflect().scale(sh["sign"]):
            raise AssertionError("cofactor is not +-h(-x)")
        return w


def hxh_reduce(system: CoefficientSystem) -> HxhReduction:
    """Triangular solve of an h(x)h(-x) system down to one relation in two unknowns."""
    sh = system.shape
    d = sh["d"]
    names = sh["coefficients"]
    idx_name = {d - 1 - i: nm for i, nm in enumerate(names)}
    first = idx_name[d - 1]
    targets = [idx_name[d - 2]] + [idx_name[d + 1 - 2 * i] for i in range(2, d + 1)
                                    if d + 1 - 2 * i >= 0]
    eqs = list(system.equations)      # ordered by y^{d-1}, ..., y^0
    solved: dict[str, MPoly] = {}
    for i, nm in enumerate(targets):
        eq = eqs[i]
        for prev, expr in solved.items():
            eq = eq.substitute(prev, expr) if eq.min_degree_in(prev) >= 0 else eq
        expr = _solve_linear(eq, nm)
        solved = {k: v.substitute(nm, expr) for k, v in solved.items()}
        solved[nm] = expr
    rest = eqs[len(targets):]

    def reduce(e: MPoly) -> MPoly:
        for nm, expr in solved.items():
            e = _subst_laurent(e, nm, expr)
        return e

    a_eq = reduce(rest[-1])
    a_expr = _solve_linear(a_eq, "a")
    free_names = [nm for nm in names if nm != first and nm not in solved]
    residual = None
    if len(rest) > 1:
        if len(rest) != 2 or len(free_names) != 1:
            raise AssertionError("unexpected shape of the reduced system")
        r, _ = reduce(rest[0]).clear_negative(first)
        residual, _ = _strip_p_power(r.to_bipoly(first, free_names[0]))
    return HxhReduction(system, solved, a_expr, (first, *free_names), residual)


def _subst_laurent(e: MPoly, name: str, expr: MPoly) -> MPoly:
    if e.degree_in(name) < 0 or name not in e.variables():
        return e
    return e.substitute(name, expr)


@dataclass(frozen=True)
class HxhBackSub:
    """2 alpha(p) w + beta(p) = +-scale(p) v for the free coefficient w."""

    reduction: HxhReduction
    alpha: UniPoly
    beta: UniPoly
    scale: UniPoly

    def describe(self) -> str:
        first, free = self.reduction.free
        return (f"+-({self.scale.render(first)})*v = 2*({self.alpha.render(first)})*{free}"
                f" + ({self.beta.render(first)})")

    def to_json(self) -> dict:
        first, free = self.reduction.free
        return {"kind": "hxh", "relation": self.describe(),
                "solved": {k: v.render() for k, v in self.reduction.solved.items()},
                "a": self.reduction.a_expr.render()}

    def recover(self, p, v) -> list[Recovery]:
        p, v = to_rational(p), to_rational(v)
        first, free = self.reduction.free
        sh = self.reduction.system.shape
        fam = f"H_{{{sh['n']},{sh['m']},{sh['k']}}}"
        den = 2 * self.alpha(p)
        if p == 0 or den == 0:
            return [Recovery((p, v), {first: p}, None,
                             f"{first} = 0: back-substitution divides by {first}")]
        out = []
        for w in sorted({(sg - self.beta(p)) / den for sg in _signs(self.scale(p) * v)}):
            wit = self.reduction.witness({first: p, free: w}, fam)
            out.append(Recovery((p, v), {first: p, free: w, "a": wit.spec.a}, wit,
                                "a = 0" if wit.degenerate else ""))
        return out


@dataclass(frozen=True)
class HxhPowerBackSub:
    """(P, w) on a plane curve with P = first^power."""

    reduction: HxhReduction
    power: int

    def describe(self) -> str:
        first, free = self.reduction.free
        return f"{first}^{self.power} = P, then solved coefficients from ({first}, {free})"

    def to_json(self) -> dict:
        return {"kind": "hxh_power", "relation": self.describe(),
                "solved": {k: v.render() for k, v in self.reduction.solved.items()},
                "a": self.reduction.a_expr.render()}

    def recover(self, P, w) -> list[Recovery]:
        P, w = to_rational(P), to_rational(w)
        first, free = self.reduction.free
        sh = self.reduction.system.shape
        roots = _rational_root(P, self.power)
        if not roots:
            return [Recovery((P, w), {"P": P, free: w}, None,
                             f"P is not a rational {self.power}-th power")]
        out = []
        for p in roots:
            if p == 0:
                out.append(Recovery((P, w), {first: p}, None, f"{first} = 0"))
                continue
            wit = self.reduction.witness({first: p, free: w},
                                         f"H_{{{sh['n']},{sh['m']},{sh['k']}}}")
            out.append(Recovery((P, w), {first: p, free: w, "a": wit.spec.a}, wit))
        return out


@dataclass(frozen=True)
class HxhModels:
    system: CoefficientSystem
    reduction: HxhReduction
    models: tuple   # HyperellipticModel / PlaneCurve objects, most reduced last


def _even_in(f: UniPoly, step: int) -> UniPoly | None:
    if any(c for i, c in enumerate(f.coeffs) if i % step):
        return None
    return UniPoly(f.coeffs[::step])


@lru_cache(maxsize=None)
def hxh_models(n: int, m: int, k: int) -> HxhModels:
    """Solve the h(x)h(-x) system and derive the curve models of the residual relation."""
    system = hxh_system(n, m, k)
    red = hxh_reduce(system)
    tag = f"{{{n},{m},{k}}}"
    if red.residual is None:
        return HxhModels(system, red, ())
    first, free = red.free
    R = red.residual
    models = []
    if R.deg_q == 2:
        sq = _complete_square(R)
        scale = sq.S * sq.c
        back = HxhBackSub(red, sq.c2, sq.c1, scale)
        H = HyperellipticModel(f"H_{tag}", first, "v", sq.rhs, back, (n, m, k, "h(x)h(-x)"),
                               sq.S * sq.S * (sq.c * sq.c))
        models.append(H)
        inner = _even_in(sq.rhs, 2)
        if inner is not None:
            models.append(HyperellipticModel(f"E_{tag}", "X", "Y", inner, PowerBackSub(back, 2),
                                             (n, m, k, "h(x)h(-x), X = p^2")))
    else:
        for step in (4, 2):
            cs = R.coeffs_in_q()
            reduced = [_even_in(c, step) for c in cs]
            if all(r is not None for r in reduced):
                terms = {}
                for j, r in enumerate(reduced):
                    for i, c in enumerate(r.coeffs):
                        if c:
                            terms[(i, j)] = c
                poly = BiPoly(terms, ("P", free))
                poly = _normalize_plane(poly)
                models.append(PlaneCurve(f"C_{tag}", poly, (n, m, k, f"h(x)h(-x), P = {first}^{step}"),
                                         HxhPowerBackSub(red, step)))
                break
        else:
            models.append(PlaneCurve(f"C_{tag}", R, (n, m, k, "h(x)h(-x)"), None))
    return HxhModels(system, red, tuple(models))


def _normalize_plane(poly: BiPoly) -> BiPoly:
    """Integral, primitive, with the top power of the first variable positive."""
    poly = _integral(poly)
    g = 0
    for c in poly.terms.values():
        g = gcd(g, int(c))
    top = max(i for i, _ in poly.terms)
    lead = sum(c for (i, _), c in poly.terms.items() if i == top and _ == 0) or \
        next(c for (i, _), c in sorted(poly.terms.items()) if i == top)
    sign = 1 if lead > 0 else -1
    return poly * Fraction(sign, g)


def hxh_even_family(u) -> tuple[Fraction, UniPoly]:
    """x^6+x^4+x^2+a = -h(x)h(-x) along the one-parameter solution of the d = 3 system."""
    u = to_rational(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    red = hxh_models(6, 4, 2).reduction
    w = red.witness({"u": u}, "two cubics even")
    return w.spec.a, w.factor


def two_cubics_even_family(u) -> tuple[Fraction, UniPoly]:
    """(a, h) with -h(x)h(-x) = x^6+x^4+x^2+a, h = x^3+ux^2+((u^2+1)/2)x+(u^2-1)(u^2+3)/(8u)."""
    u = to_rational(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    h = UniPoly([(u - 1) * (u + 1) * (u * u + 3) / (8 * u), (u * u + 1) / 2, u, 1])
    a = -((u - 1) ** 2) * (u + 1) ** 2 * (3 + u * u) ** 2 / (64 * u * u)
    if -(h * h.reflect()) != UniPoly.quadrinomial(6, 4, 2, a):
        raise AssertionError("h(x)h(-x) identity failed")
    return a, h


# product of two cubics for x^6 + x^5 + x^4 + a


def _tc_names():
    return ("p", "q", "r", "s", "t", "u", "a")


def two_cubics_system() -> CoefficientSystem:
    names = _tc_names()
    p, q, r, s, t, u, a = (MPoly.var(names, nm) for nm in names)
    eqs = (p + s - 1, q + p * s + t - 1, r + q * s + p * t + u,
           r * s + q * t + p * u, r * t + q * u, r * u - a)
    return CoefficientSystem(names, eqs, "cubic x cubic",
                             {"product": "(x^3+px^2+qx+r)(x^3+sx^2+tx+u) = x^6+x^5+x^4+a"})


def _deg6() -> BiPoly:
    p = BiPoly.var(0)
    q = BiPoly.var(1)
    w = p * p - p + 1
    return (-(p * p) * w * w + w * (p * p * 3 - p + 1) * q
            - (p * p * 3 - p + 2) * q * q + q * q * q * 2)


def _deg6_from_system() -> BiPoly:
    """Eliminate s, t, u; the two equations left are linear in r."""
    names = _tc_names()
    sysm = two_cubics_system()
    P, Q, R = (MPoly.var(names, nm) for nm in "pqr")
    S = 1 - P
    T = 1 - Q - P * S
    U = -(R + Q * S + P * T)
    e4 = R * S + Q * T + P * U
    e5 = R * T + Q * U
    a1, b1 = e4.coeff_of("r", 1), e4.coeff_of("r", 0)
    a2, b2 = e5.coeff_of("r", 1), e5.coeff_of("r", 0)
    if e4.degree_in("r") > 1 or e5.degree_in("r") > 1:
        raise AssertionError("elimination is not linear in r")
    res = a1 * b2 - a2 * b1
    del sysm
    return res.to_bipoly("p", "q")


@dataclass(frozen=True)
class TwoCubicsBackSub:
    def describe(self) -> str:
        return "q = (p^2-p+1)/(X+1), p a rational root of deg6 matching Y"

    def to_json(self) -> dict:
        return {"kind": "two_cubics", "relation": self.describe()}

    def recover(self, X, Y) -> list[Recovery]:
        X, Y = to_rational(X), to_rational(Y)
        if X == -1:
            return [Recovery((X, Y), {"X": X}, None, "X = -1 corresponds to q at infinity")]
        D = _deg6()
        p = UniPoly.x()
        w = p * p - p + 1
        qexpr = w.scale(1 / (X + 1))
        g = D.substitute(p, qexpr)
        out = []
        roots = [r for r, _ in rational_roots(g)] if not g.is_zero() and g.degree else []
        for p0 in roots:
            q0 = qexpr(p0)
            if q0 == 0:
                continue
            img = two_cubics_map(p0, q0)
            if img != (X, Y):
                continue
            out.append(_two_cubics_recovery(p0, q0, (X, Y)))
        if not out:
            out.append(Recovery((X, Y), {"X": X}, None, "no finite (p, q) over this point"))
        return out


def _two_cubics_recovery(p, q, point) -> Recovery:
    s = 1 - p
    t = 1 - q - p * s
    r = None
    # rs + qt + pu = 0 and rt + qu = 0 with u = -(r + qs + pt)
    if s - p != 0:
        r = (p * q * s + p * p * t - q * t) / (s - p)
    elif t - q != 0:
        r = (q * q * s + p * q * t) / (t - q)
    if r is None:
        if q * t - p * q * s - p * p * t != 0 or q * q * s + p * q * t != 0:
            return Recovery(point, {"p": p, "q": q}, None,
                            "elimination artefact: no r solves the remaining equations")
        return Recovery(point, {"p": p, "q": q}, None, "r undetermined")
    u = -(r + q * s + p * t)
    a = r * u
    h = UniPoly([r, q, p, 1])
    g = UniPoly([u, t, s, 1])
    if h * g != UniPoly.quadrinomial(6, 5, 4, a):
        return Recovery(point, {"p": p, "q": q}, None, "not a solution of the full system")
    w = make_witness(6, 5, 4, a, h, "two cubics", {"p": p, "q": q, "r": r})
    return Recovery(point, {"p": p, "q": q, "r": r, "s": s, "t": t, "u": u, "a": a}, w,
                    "a = 0" if a == 0 else "")


def _two_cubics_map_polys() -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
    p = BiPoly.var(0)
    q = BiPoly.var(1)
    w = p * p - p + 1
    xn = w - q
    xd = q
    yn = ((p - 1) * p * w * w * (-2) + w * (p * p * 5 - p * 5 + 1) * q
          - (p * p * 5 - p * 3 + 1) * q * q + q * q * q * 2)
    yd = q * q * q
    return xn, xd, yn, yd


def two_cubics_map(p, q):
    """(X, Y) image of a point of the sextic relation; None for the point at infinity."""
    from .arith.series import limit_along_curve
    p, q = to_rational(p), to_rational(q)
    D = _deg6()
    if D(p, q) != 0:
        raise ValueError("(p, q) does not satisfy the sextic relation")
    xn, xd, yn, yd = _two_cubics_map_polys()
    try:
        X = limit_along_curve(xn, xd, D, (p, q))
        Y = limit_along_curve(yn, yd, D, (p, q))
    except ZeroDivisionError:
        return None
    return (X, Y)


@dataclass(frozen=True)
class TwoCubics:
    system: CoefficientSystem
    curve: PlaneCurve
    model: HyperellipticModel

    def forward(self, p, q):
        return two_cubics_map(p, q)

    def __iter__(self):
        return iter((self.system, self.model))


def two_cubics_curve() -> TwoCubics:
    """The cubic-times-cubic split of x^6+x^5+x^4+a and its genus-2 model."""
    D = _deg6()
    if _deg6_from_system() != D and _deg6_from_system() != -D:
        raise AssertionError("elimination does not reproduce the sextic relation")
    curve = PlaneCurve("deg6", D, (6, 5, 4, "cubic x cubic"), None)
    rhs = UniPoly([0, 4, 1, 6, 1, 4])
    model = HyperellipticModel("C", "X", "Y", rhs, TwoCubicsBackSub(), (6, 5, 4, "cubic x cubic"))
    return TwoCubics(two_cubics_system(), curve, model)


# reducibility type (1,1,2) in degree 4

@dataclass(frozen=True)
class Type112BackSub:
    m: int
    k: int
    c1: UniPoly
    c0: UniPoly

    def describe(self) -> str:
        return f"q = -({self.c0.render('p')})/({self.c1.render('p')})"

    def to_json(self) -> dict:
        return {"kind": "type112", "relation": self.describe()}

    def recover(self, p, r) -> list[Recovery]:
        p = to_rational(p)
        d = self.c1(p)
        if d == 0:
            return [Recovery((p, r), {"p": p}, None, "q undefined at this p")]
        q = -self.c0(p) / d
        rec = _quadratic_recovery(4, self.m, self.k, p, q, f"C_{{{self.m},{self.k}}}", (p, r))
        if rec.witness is not None:
            roots = rational_roots(rec.witness.cofactor) if rec.witness.cofactor.degree else []
            if sum(mu for _, mu in roots) != 2:
                return [Recovery((p, r), rec.values, rec.witness, "cofactor does not split")]
        return [rec]


def type112_curve(m: int, k: int) -> HyperellipticModel:
    """r^2 = rhs(p): x^4+x^m+x^k+a splits as quadratic times two linear factors."""
    if (m, k) not in {(2, 1), (3, 1), (3, 2)}:
        raise ValueError("(m, k) must be one of (2,1), (3,1), (3,2)")
    F = f_symbolic(4, m, k)
    cs = F.coeffs_in_q()
    if len(cs) != 2:
        raise AssertionError("F_{4,m,k} should be linear in q")
    c0, c1 = cs
    e3 = 1 if m == 3 else 0
    e2 = 1 if 2 in (m, k) else 0
    p = UniPoly.x()
    p2 = -p + e3                      # cofactor x^2 + p2 x + q2, q2 = e2 - q - p p2
    # disc(cofactor) = p2^2 - 4(e2 - q - p p2) = d0 + d1 q
    d0 = p2 * p2 - (UniPoly.const(e2) - p * p2) * 4
    d1 = UniPoly.const(4)
    raw = c1 * (d0 * c1 - d1 * c0)
    c, S, rhs = _square_split(raw)
    return HyperellipticModel(f"C_{{{m},{k}}}", "p", "r", rhs, Type112BackSub(m, k, c1, c0),
                              (4, m, k, "type (1,1,2)"), S * S * (c * c))


# registry used by the CLI and the search module

def model_for(n: int, m: int, k: int):
    """The principal model for an exponent triple."""
    if (n, m, k) in _SQUARE_CONTENT:
        return square_content_cases(n, m, k)[1]
    if n in (5, 6):
        return quadratic_factor_curve(n, m, k)
    if n % 2 == 0 and m % 2 == 0 and k % 2 == 0:
        models = hxh_models(n, m, k).models
        if models:
            return models[-1]
        raise ValueError(f"({n}, {m}, {k}) is a one-parameter family, not a curve")
    if n > m > k and n - m == m - k:
        return t_model(n, n - m)
    raise ValueError(f"no curve model for ({n}, {m}, {k})")
