"""Command-line entry point: ``bracketlab <subcommand> ...``.

Every subcommand prints one JSON document (sorted keys, rationals as "p/q").
Exit status: 0 on success, 1 on a domain error or failed verification (a JSON
diagnostic goes to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .bracket import bracket_degree, poisson_bracket, su_bound
from .checks import check_dependence, check_divisibility, min_bracket_degree_over_G
from .config import load_search_config, load_spec, search_config_from_mapping
from .errors import BracketLabError, NotApplicable
from .formulas import (build_components, build_G, check_conditions, coefficient_table,
                       smallest_buildable_threshold)
from .hreduce import express_in_H, h_reduce
from .lattice import (LatticeProblem, brute_force_min, closed_form_min, simplex_data,
                      weight_e0_plus)
from .parse import infer_nvars, parse_poly
from .report import dumps, write_atomic

SEED_ENV = "BRACKETLAB_SEED"


class _Failed(Exception):
    """Verification ran but did not pass; the report is still emitted."""

    def __init__(self, report: dict, message: str):
        super().__init__(message)
        self.report = report


def _env_seed() -> int | None:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer (got {raw!r})") from None


def _poly_args(args, *names):
    n = args.n if args.n is not None else max(2, *(infer_nvars(getattr(args, x)) for x in names))
    return [parse_poly(getattr(args, name), n) for name in names]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


# subcommand handlers


def cmd_bracket(args) -> dict:
    f, g = _poly_args(args, "f", "g")
    br = poisson_bracket(f, g)
    return {"bracket": br.to_json(), "degree": str(br.degree)}


def cmd_bracket_deg(args) -> dict:
    f, g = _poly_args(args, "f", "g")
    return {"degree": str(bracket_degree(f, g))}


def cmd_hreduce(args) -> dict:
    H, P = _poly_args(args, "H", "P")
    a, k = h_reduce(H, P)
    return {"a": str(a), "k": k}


def cmd_express(args) -> dict:
    H, P = _poly_args(args, "H", "P")
    return {"coefficients": [str(c) for c in express_in_H(H, P)]}


def _threshold(spec, i):
    return smallest_buildable_threshold(spec) if i is None else i


def cmd_build_g(args) -> dict:
    spec = load_spec(args.spec)
    i = _threshold(spec, args.i)
    comps = build_components(spec, i)
    G = build_G(spec, i)
    bd = bracket_degree(spec.F(), G)
    return {
        "spec": spec.describe(),
        "i": i,
        "F": spec.F().to_text(),
        "G": G.to_text(),
        "components": {str(j): p.to_text() for j, p in comps.items()},
        "bracket_degree": str(bd),
        "bound": spec.d + i,
        "below_bound": bd < spec.d + i,
    }


def cmd_verify_formula(args) -> dict:
    spec = load_spec(args.spec)
    i = _threshold(spec, args.i)
    table = coefficient_table(spec, i)
    cond = check_conditions(table, i, spec.s, spec.r)
    G = build_G(spec, i)
    bd = bracket_degree(spec.F(), G)
    report = {
        "i": i,
        "conditions": cond.to_json(),
        "bracket_degree": str(bd),
        "bound": spec.d + i,
        "ok": cond.ok and bd < spec.d + i,
    }
    if args.table:
        report["table"] = table.to_json()
    if not report["ok"]:
        raise _Failed(report, "formula verification failed")
    return report


def cmd_lattice_min(args) -> dict:
    if args.weight:
        weight = tuple(_rational(x) for x in args.weight.split(","))
    else:
        weight = weight_e0_plus(args.d, args.k)
    prob = LatticeProblem(args.j, args.N, args.d, args.t, weight)
    out: dict = {"j": args.j, "N": args.N, "d": args.d, "t": args.t,
                 "weight": [str(w) for w in prob.weight]}
    results = []
    if args.mode in ("brute", "both"):
        b = brute_force_min(prob)
        out["brute"] = b.to_json()
        results.append(b)
    if args.mode in ("closed", "both"):
        if args.weight:
            raise NotApplicable("closed forms cover only the weights a0 + k*a_s (use --k)")
        c = closed_form_min(args.j, args.N, args.d, args.t, args.k)
        out["closed"] = c.to_json()
        results.append(c)
    out["value"] = str(results[0].value)
    out["argmins"] = [list(a) for a in results[0].argmins]
    if len(results) == 2:
        out["agree"] = (results[0].value, results[0].argmins) == (results[1].value, results[1].argmins)
    if args.simplex:
        k = Fraction(args.k)
        if args.t != 1 or k.denominator != 1:
            raise NotApplicable("simplex data is defined for t = 1 and integer k")
        out["simplex"] = simplex_data(args.j, args.N, args.d, int(k)).to_json()
    if out.get("agree") is False:
        raise _Failed(out, "brute force and closed form disagree")
    return out


def _G_for(spec, args):
    if args.G:
        return parse_poly(args.G, spec.nvars)
    return build_G(spec, _threshold(spec, args.i))


def cmd_check_divisibility(args) -> dict:
    spec = load_spec(args.spec)
    G = _G_for(spec, args)
    rep = check_divisibility(spec, spec.F(), G, args.k).to_json()
    rep["G"] = G.to_text()
    return rep


def cmd_check_dependence(args) -> dict:
    spec = load_spec(args.spec)
    G = _G_for(spec, args)
    rep = check_dependence(spec, spec.F(), G).to_json()
    rep["G"] = G.to_text()
    return rep


def cmd_oracle(args) -> dict:
    n = args.n or max(2, infer_nvars(args.F), infer_nvars(args.h))
    F, h = parse_poly(args.F, n), parse_poly(args.h, n)
    res = min_bracket_degree_over_G(F, args.N, h, args.aN, args.floor, args.max_unknowns)
    return res.to_json()


def cmd_su_bound(args) -> dict:
    f, g = _poly_args(args, "f", "g")
    P = parse_poly(args.P, 2)
    r = su_bound(f, g, P)
    return {
        "gcd": r.gcd_degs, "D": str(r.deficiency), "weighted_degree": r.weighted_degree,
        "bound": str(r.bound), "bracket_degree": r.bracket_degree,
        "composed_degree": str(r.composed_degree), "holds": r.holds,
    }


def cmd_search(args) -> dict:
    from .conjecture import run_search

    overrides = dict(nvars=args.n, d=args.d, N=args.N, t=args.t, samples=args.samples,
                     mode=args.mode, terms=args.terms, seed=args.seed_given,
                     degenerate=True if args.degenerate else None)
    if args.config:
        cfg = load_search_config(args.config, **overrides)
    else:
        cfg = search_config_from_mapping({}, **overrides)
    summary = run_search(cfg, threads=args.threads)
    if args.dump_dir:
        by_index = {p["index"]: p for p in summary["pairs"]}
        for idx in summary["candidates"]:
            write_atomic(os.path.join(args.dump_dir, f"candidate_{idx:06d}.json"),
                         dumps({"config": summary["config"], "pair": by_index[idx]}))
    return summary


def cmd_selftest(args) -> dict:
    from .selftest import run_selftest

    rep = run_selftest(args.seed)
    if not rep["ok"]:
        raise _Failed(rep, "selftest failed")
    return rep


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or 0)")
    common.add_argument("--threads", type=int, default=1, help="worker processes where supported")
    common.add_argument("--out", help="write the JSON report to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="bracketlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, text in [("bracket", cmd_bracket, "Poisson bracket [f, g]"),
                             ("bracket-deg", cmd_bracket_deg, "degree of [f, g]")]:
        p = add(name, func, text)
        p.add_argument("--n", type=int, help="number of variables (default: inferred)")
        p.add_argument("--f", required=True)
        p.add_argument("--g", required=True)

    for name, func, text in [("hreduce", cmd_hreduce, "write homogeneous P commuting with H as a*H^k"),
                             ("express", cmd_express, "write P commuting with H as a polynomial in H")]:
        p = add(name, func, text)
        p.add_argument("--n", type=int)
        p.add_argument("--H", required=True)
        p.add_argument("--P", required=True)

    p = add("build-g", cmd_build_g, "assemble G = G_i + ... + G_N from a family spec")
    p.add_argument("--spec", required=True, help="YAML family spec")
    p.add_argument("--i", type=int, help="threshold (default: smallest that assembles)")

    p = add("verify-formula", cmd_verify_formula, "check C1/C2/P1 and the bracket-degree drop")
    p.add_argument("--spec", required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--table", action="store_true", help="include the coefficient table")

    p = add("lattice-min", cmd_lattice_min, "minimize a0 + k*a_s (or a custom weight) over Z^(t)_{j,N,d}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--k", type=_rational, default=Fraction(0))
    p.add_argument("--weight", help="comma-separated weights for a0..as (brute force only)")
    p.add_argument("--mode", choices=["brute", "closed", "both"], default="both")
    p.add_argument("--simplex", action="store_true", help="include simplex vertices and minimum")

    for name, func, text in [("check-divisibility", cmd_check_divisibility, "does h^(k+1) divide F_s?"),
                             ("check-dependence", cmd_check_dependence, "relation 4F_(s-1) - Ft^2 = h*Fh")]:
        p = add(name, func, text)
        p.add_argument("--spec", required=True)
        p.add_argument("--G", help="G as text (default: built from the spec)")
        p.add_argument("--i", type=int, help="threshold used when G is built")
        if name == "check-divisibility":
            p.add_argument("--k", type=int, default=0)

    p = add("oracle-min-bracket", cmd_oracle, "least d+i reachable by some G with fixed top form")
    p.add_argument("--n", type=int)
    p.add_argument("--F", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--aN", type=_rational, default=Fraction(1))
    p.add_argument("--floor", type=int, default=1, help="smallest i examined")
    p.add_argument("--max-unknowns", type=int, default=5000)

    p = add("su-bound", cmd_su_bound, "degree estimate deg P(f,g) >= D(f,g) * w(P)")
    p.add_argument("--n", type=int)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--P", required=True, help="polynomial in x1, x2 standing for f, g")

    p = add("search-conjecture", cmd_search, "random search for small deg[F,G] / min(deg F, deg G)")
    p.add_argument("--config", help="YAML search settings; flags override")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--terms", type=int)
    p.add_argument("--mode", choices=["random", "family"])
    p.add_argument("--degenerate", action="store_true", help="proportional linear parts")
    p.add_argument("--dump-dir", help="directory for per-candidate JSON files")

    add("selftest", cmd_selftest, "run the built-in invariant sweep")
    return parser


def _emit(report: dict, out: str | None) -> None:
    text = dumps(report)
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.seed_given = args.seed if args.seed is not None else _env_seed()
    except ValueError as exc:
        sys.stderr.write(f"bracketlab: error: {exc}\n")
        return 2
    args.seed = 0 if args.seed_given is None else args.seed_given
    if args.threads < 1:
        sys.stderr.write("bracketlab: error: --threads must be at least 1\n")
        return 2
    try:
        report = args.func(args)
    except _Failed as exc:
        _emit(exc.report, args.out)
        sys.stderr.write(dumps({"error": "VerificationFailed", "message": str(exc)}))
        return 1
    except (BracketLabError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc),
                                "command": args.command}))
        return 1
    _emit(report, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
