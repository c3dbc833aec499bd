"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys

from .arith import parse_poly, parse_rational
from .arith.rational import format_rational
from .curves import (PlaneCurve, hxh_models, quadratic_factor_curve, square_content_cases,
                     t_model, t_model_infinity, type112_curve, _SQUARE_CONTENT)
from .elliptic import generate_reducible, witness_json
from .families import (DIV22_CASES, conjecture_Fmn_squarefree, deg4_family, deg10_family,
                       div22_family, multiplicity_profile, redquad_corollary_check,
                       redquad_family, scaled_family, special_An)
from .quadrem import QuadrinomialSpec, quadratic
from .search import (ORACLE_MAX_FACTOR_DEGREE, kronecker_factor, linear_factors_of,
                     oracle_max_degree, quadratic_factors_of, search_plane_curve, search_points)
from .table import verify_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rat(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers like 2,1, got {text!r}")
    return a, b


def _emit(args, data, text_lines):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _spec(args) -> QuadrinomialSpec:
    return QuadrinomialSpec(args.n, args.m, args.k, args.a)


# reduce

def cmd_reduce(args) -> int:
    spec = _spec(args)
    f = spec.poly()
    data = {"poly": f.render(), "linear": [], "quadratic": []}
    lines = [f"f = {f.render()}"]
    for r, mult in linear_factors_of(spec):
        g = parse_poly("x") - r if r else parse_poly("x")
        cof = f // g
        data["linear"].append({"root": format_rational(r), "multiplicity": mult,
                               "factor": g.render(), "cofactor": cof.render()})
        lines.append(f"linear factor {g.render()} (multiplicity {mult}), cofactor {cof.render()}")
    if spec.a != 0:
        for p, q in quadratic_factors_of(spec):
            g = quadratic(p, q)
            cof = f // g
            data["quadratic"].append({"p": format_rational(p), "q": format_rational(q),
                                      "factor": g.render(), "cofactor": cof.render()})
            lines.append(f"quadratic factor {g.render()}, cofactor {cof.render()}")
    if not data["linear"] and not data["quadratic"]:
        lines.append("no quadratic factor found" + ("" if spec.a == 0 else " (elimination is exhaustive)"))
    if args.certify:
        cert = _certify(spec, f, data)
        lines.append(cert)
    _emit(args, data, lines)
    return EXIT_OK


def _certify(spec, f, data) -> str:
    if data["linear"]:
        deg, g = 1, data["linear"][0]["factor"]
    elif data["quadratic"]:
        deg, g = 2, data["quadratic"][0]["factor"]
    else:
        top = f.degree // 2
        if f.degree > oracle_max_degree() or top > ORACLE_MAX_FACTOR_DEGREE:
            raise UsageError(f"refused: degree {f.degree} is outside the oracle range "
                             f"(cap {oracle_max_degree()}); no certificate issued")
        res = kronecker_factor(f, top)
        if res.found:
            deg, g = res.factor.degree, res.factor.render()
        else:
            deg, g = f.degree, f.render()
    data["min_factor_degree"] = deg
    data["min_degree_factor"] = g
    return f"min factor degree {deg}, factor {g}"


# curve

def _curve_objects(args):
    if args.t_model:
        n, m = args.t_model
        out = [("model", t_model(n, m))]
        for rec in t_model_infinity(n, m):
            out.append(("p = 0 factor", rec))
        return out
    if args.type112:
        return [("model", type112_curve(*args.type112))]
    if args.n is None or args.m is None or args.k is None:
        raise UsageError("give n m k, --t-model n m or --type112 m k")
    n, m, k = args.n, args.m, args.k
    if (n, m, k) in _SQUARE_CONTENT:
        branch, model = square_content_cases(n, m, k)
        return [("branch", branch), ("model", model)]
    if n in (5, 6):
        return [("model", quadratic_factor_curve(n, m, k))]
    if n % 2 == 0 and m % 2 == 0 and k % 2 == 0:
        hm = hxh_models(n, m, k)
        if not hm.models:
            raise UsageError(f"({n}, {m}, {k}) reduces to a one-parameter family, not a curve")
        return [("model", mdl) for mdl in hm.models]
    if n - m == m - k:
        return [("model", t_model(n, n - m))]
    raise UsageError(f"no curve model for ({n}, {m}, {k})")


def _recovery_json(rec) -> dict:
    return {"point": [format_rational(v) if not isinstance(v, str) else v for v in rec.point],
            "values": {k: format_rational(v) for k, v in rec.values.items()},
            "witness": rec.witness.to_json() if rec.witness else None,
            "note": rec.note}


def cmd_curve(args) -> int:
    objs = _curve_objects(args)
    data, lines = [], []
    for kind, obj in objs:
        if kind == "branch":
            data.append({"kind": kind, **obj.to_json()})
            lines.append(obj.description)
        elif kind == "model":
            data.append({"kind": kind, **obj.to_json()})
            lines.append(f"{obj.name}: {obj.render()}")
            rc = getattr(obj, "removed_content", None)
            if rc is not None and rc != rc.const(1):
                lines.append(f"  removed square content {rc.render(obj.variable)}")
            if obj.back_sub is not None:
                lines.append(f"  back-substitution: {obj.back_sub.describe()}")
        else:
            data.append({"kind": kind, **_recovery_json(obj)})
            w = obj.witness
            lines.append(f"{kind}: a = {format_rational(w.spec.a)}, factor {w.factor.render()}"
                         if w else f"{kind}: {obj.note}")
    _emit(args, data, lines)
    return EXIT_OK


# points

def cmd_points(args) -> int:
    objs = [o for kind, o in _curve_objects(args) if kind == "model"]
    if args.which:
        objs = [o for o in objs if o.name.startswith(args.which + "_")]
        if not objs:
            raise UsageError(f"no {args.which} model for this selector")
    model = objs[-1] if not args.which else objs[0]
    if isinstance(model, PlaneCurve):
        rep = search_plane_curve(model, args.height)
    else:
        rep = search_points(model, args.height)
    data = rep.to_json()
    lines = [rep.summary()]
    lines += [f"  ({format_rational(x)}, {format_rational(y)})" for x, y in rep.points_found]
    if args.recover:
        data["recoveries"] = []
        for x, y in rep.points_found:
            ys = [y] if y == 0 or isinstance(model, PlaneCurve) else [y, -y]
            for yy in ys:
                for rec in model.recover(x, yy):
                    data["recoveries"].append(_recovery_json(rec))
                    w = rec.witness
                    lines.append(f"  ({format_rational(x)}, {format_rational(yy)}) -> "
                                 + (f"a = {format_rational(w.spec.a)}, factor {w.factor.render()}"
                                    if w else rec.note))
    _emit(args, data, lines)
    return EXIT_OK


# generate

def cmd_generate(args) -> int:
    ws = generate_reducible((args.n, args.m, args.k), args.count)
    data = [witness_json(w) for w in ws]
    lines = [f"a = {format_rational(w.spec.a)}: ({w.factor.render()}) * ({w.cofactor.render()})"
             f"  [multiple {w.parameters['multiple']}]" for w in ws]
    _emit(args, data, lines)
    return EXIT_OK


# family

def _witness_out(args, w) -> int:
    d = w.to_json()
    lines = [f"{w.poly.render()} = ({w.factor.render()}) * ({w.cofactor.render()})"]
    if w.flags:
        lines.append("flags: " + ", ".join(w.flags))
    _emit(args, d, lines)
    return EXIT_OK


def cmd_family(args) -> int:
    kind = args.family
    if kind == "deg4":
        return _witness_out(args, deg4_family(args.case, args.p))
    if kind == "div22":
        return _witness_out(args, div22_family(args.case, args.s, args.t))
    if kind == "deg10":
        return _witness_out(args, deg10_family(args.u))
    if kind == "redquad":
        return _witness_out(args, redquad_family(args.n, args.m))
    if kind == "redquad-check":
        ok = redquad_corollary_check(args.N, args.M)
        _emit(args, {"N": args.N, "M": args.M, "ok": ok}, [f"corollary check: {'ok' if ok else 'FAILED'}"])
        return EXIT_OK if ok else EXIT_FAIL
    if kind == "scaled":
        h = scaled_family(args.base, args.s)
        _emit(args, {"base": args.base, "s": args.s, "quadratic": h.render()}, [h.render()])
        return EXIT_OK
    if kind == "special-an":
        v = special_An(args.case, args.n)
        _emit(args, {"case": list(args.case), "n": args.n, "value": v}, [str(v)])
        return EXIT_OK
    raise UsageError(f"unknown family {kind}")


# oracle

def cmd_oracle(args) -> int:
    if args.spec:
        n, m, k, a = args.spec
        f = QuadrinomialSpec(int(n), int(m), int(k), parse_rational(a)).poly()
    elif args.poly:
        f = parse_poly(args.poly)
    else:
        raise UsageError("give a polynomial or --spec n m k a")
    max_deg = args.max_deg if args.max_deg is not None else min(f.degree // 2, ORACLE_MAX_FACTOR_DEGREE)
    try:
        res = kronecker_factor(f, max_deg)
    except ValueError as e:
        raise UsageError(f"refused: {e}")
    _emit(args, res.to_json(), [f"{f.render()}: {res.certificate()}"])
    return EXIT_OK


# multiplicity

def cmd_multiplicity(args) -> int:
    top, dec = multiplicity_profile(_spec(args))
    data = {"max_multiplicity": top,
            "decomposition": [{"factor": g.render(), "multiplicity": i} for g, i in dec]}
    lines = [f"max multiplicity {top}"] + [f"  ({g.render()})^{i}" for g, i in dec]
    _emit(args, data, lines)
    return EXIT_OK


# verify-table

def cmd_verify_table(args) -> int:
    reports = verify_table(args.data, use_oracle=not args.no_oracle)
    data = [r.to_json() for r in reports]
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        failed = [k for k, v in r.checks.items() if not v]
        extra = f" failed: {', '.join(failed)}" if failed else ""
        lines.append(f"{status} {r.row.label()}{extra}; " + "; ".join(r.notes))
    bad = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - bad}/{len(reports)} rows pass")
    _emit(args, data, lines)
    return EXIT_FAIL if bad else EXIT_OK


# conjecture-scan

def cmd_conjecture_scan(args) -> int:
    results = []
    for n in range(3, args.max_n + 1):
        for m in range(1, n):
            if n > 2 * m:
                results.append({"m": m, "n": n, "squarefree": conjecture_Fmn_squarefree(m, n)})
    bad = [r for r in results if not r["squarefree"]]
    lines = [f"{len(results)} pairs (m, n) with n <= {args.max_n}, n > 2m; "
             f"{len(bad)} with a repeated root"]
    lines += [f"  potential counterexample: m = {r['m']}, n = {r['n']}" for r in bad]
    _emit(args, {"results": results, "counterexamples": bad}, lines)
    return EXIT_OK


# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadfactor",
                                 description="Rational factors of x^n + x^m + x^k + a.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("reduce", "linear and quadratic factors of one quadrinomial")
    for x in "nmk":
        p.add_argument(x, type=int)
    p.add_argument("a", type=_rat)
    p.add_argument("--certify", action="store_true", help="certify the minimal factor degree")
    p.set_defaults(func=cmd_reduce)

    for name, func, help_ in (("curve", cmd_curve, "curve model for an exponent triple"),
                              ("points", cmd_points, "search rational points on a model")):
        p = add(name, help_)
        for x in "nmk":
            p.add_argument(x, type=int, nargs="?")
        p.add_argument("--t-model", nargs=2, type=int, metavar=("N", "M"))
        p.add_argument("--type112", nargs=2, type=int, metavar=("M", "K"))
        if name == "points":
            p.add_argument("--height", type=int, default=1000)
            p.add_argument("--which", choices=("H", "E", "C"), help="pick one of several models")
            p.add_argument("--recover", action="store_true", help="back-substitute every point")
        p.set_defaults(func=func)

    p = add("generate", "factorizations from an elliptic family")
    for x in "nmk":
        p.add_argument(x, type=int)
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_generate)

    p = add("family", "closed-form families")
    fam = p.add_subparsers(dest="family", required=True)

    def addf(name, help_):
        q = fam.add_parser(name, help=help_)
        q.add_argument("--json", action="store_true", help="machine-readable output")
        return q

    q = addf("deg4", "degree-four parametrizations")
    q.add_argument("--case", type=_pair, required=True)
    q.add_argument("--p", type=_rat, required=True)
    q = addf("div22", "quadratics with infinitely many multiples")
    q.add_argument("--case", choices=DIV22_CASES, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--t", type=int, default=0)
    q = addf("deg10", "x^10 + x^6 + x^2 + a")
    q.add_argument("--u", type=_rat, required=True)
    q = addf("redquad", "x^(3n) + x^(3m) + x^(n+m) - 1/27")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = addf("redquad-check", "the x -> x^3 corollary check")
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--M", type=int, required=True)
    q = addf("scaled", "scaled special quadratics")
    q.add_argument("--base", required=True)
    q.add_argument("--s", type=int, required=True)
    q = addf("special-an", "closed forms of A_n at special (p, q)")
    q.add_argument("--case", type=_pair, required=True)
    q.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = add("oracle", "Kronecker factor search")
    p.add_argument("poly", nargs="?")
    p.add_argument("--spec", nargs=4, metavar=("N", "M", "K", "A"))
    p.add_argument("--max-deg", type=int)
    p.set_defaults(func=cmd_oracle)

    p = add("multiplicity", "squarefree decomposition of a quadrinomial")
    for x in "nmk":
        p.add_argument(x, type=int)
    p.add_argument("a", type=_rat)
    p.set_defaults(func=cmd_multiplicity)

    p = add("verify-table", "re-check the shipped table")
    p.add_argument("--data", help="alternative JSON-lines file")
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_verify_table)

    p = add("conjecture-scan", "squarefreeness of the t-model discriminants")
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_conjecture_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
