"""Command-line front end.

Structured results go to stdout as one JSON object per line; a readable
summary goes to stderr. Exit codes: 0 ok, 2 usage, 3 parse, 4 infeasible,
5 audit failure, 6 oracle cap refusal.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import oracles
from .density import density_aug, ratio
from .errors import CapExceededError, InfeasibleError, InputError, ParseError
from .fcec import FcecInstance, fcec_approx
from .graph import (Graph, complete_graph, gen_gnp, load_instance, path_graph, save_instance,
                    star_graph, vertex_set)
from .mwec import MwecInstance, mwec_dp
from .reductions import gap_experiment, mwec_via_fcec

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_AUDIT, EXIT_CAP = 0, 2, 3, 4, 5, 6


class UsageError(Exception):
    pass


def _env(name, default):
    return os.environ.get(f"EDGECOVER_{name}", default)


def _fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _ids(text) -> tuple:
    if isinstance(text, (tuple, list)):
        return tuple(int(x) for x in text)
    if isinstance(text, int):
        return (text,)
    text = str(text).strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"vertex list must be comma-separated integers, got {text!r}") from None


def _digest(g: Graph) -> str:
    return hashlib.sha256(save_instance(g).encode()).hexdigest()[:16]


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def emit(report: dict, stream=None) -> str:
    line = json.dumps(_jsonable(report), sort_keys=True, separators=(",", ":"))
    print(line, file=stream or sys.stdout)
    return line


def _table(rows, stream=None):
    stream = stream or sys.stderr
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        print(f"  {k.ljust(width)}  {v}", file=stream)


# -- gen ------------------------------------------------------------------------

def _weights(spec: str, n: int, seed: int):
    if spec == "uniform":
        return (1,) * n
    kind, _, rest = spec.partition(":")
    if kind == "random":
        try:
            lo, hi = (int(x) for x in rest.split(":"))
        except ValueError:
            raise UsageError("random weights need the form random:LO:HI") from None
        if not 0 <= lo <= hi:
            raise UsageError("random weights need 0 <= LO <= HI")
        rnd = random.Random(seed)
        return tuple(rnd.randint(lo, hi) for _ in range(n))
    try:
        values = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise UsageError(f"unknown weight spec {spec!r}") from None
    if len(values) != n:
        raise UsageError(f"expected {n} weights, got {len(values)}")
    return values


def cmd_gen(args) -> int:
    size = args.size
    if size < 1 and args.kind != "star":
        raise UsageError("size must be >= 1")
    if args.kind == "star" and size < 0:
        raise UsageError("star needs a nonnegative leaf count")
    n = size + 1 if args.kind == "star" else size
    weights = _weights(args.weights, n, args.seed)
    if args.kind == "path":
        g = path_graph(n, weights)
    elif args.kind == "star":
        g = star_graph(size, weights)
    elif args.kind == "complete":
        g = complete_graph(n, weights)
    else:
        p = args.p if args.p is not None else Fraction(1, math.isqrt(n))
        if not 0 <= p <= 1:
            raise UsageError(f"edge probability must lie in [0, 1], got {p}")
        g = gen_gnp(n, p, args.seed, weights)
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param needs KEY=VALUE, got {item!r}")
        params[key] = value
    text = save_instance(g, params)
    if args.out and args.out != "-":
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        return EXIT_OK
    emit({"command": "gen", "kind": args.kind, "n": g.n, "m": g.m, "seed": args.seed,
          "digest": _digest(g), "out": str(args.out)})
    return EXIT_OK


# -- solve ------------------------------------------------------------------------

def _param(args, params, name, flag):
    value = getattr(args, flag)
    if value is None:
        value = params.get(name)
    if value is None:
        raise UsageError(f"missing parameter {name} (flag --{flag.replace('_', '-')} or '#! {name}=...')")
    return value


def _oracle(args, fn, *a, **kw):
    return fn(*a, cap=args.oracle_cap, **kw)


def cmd_solve(args) -> int:
    try:
        text = Path(args.instance).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read instance: {exc}") from None
    g, params = load_instance(text)
    report = {"command": f"solve {args.problem}", "instance": _digest(g), "n": g.n, "m": g.m}
    audit = {}
    started = time.perf_counter()
    want_oracle = args.oracle or args.audit

    if args.problem == "fcec":
        target = int(_param(args, params, "W", "W"))
        report["parameters"] = {"W": target}
        sol = fcec_approx(FcecInstance(g, target))
        report["solution"] = {"set": sol.members, "weight": sol.weight, "touched": sol.touched}
        if want_oracle and (args.oracle or g.n <= args.oracle_cap):
            opt = _oracle(args, oracles.brute_fcec, g, target)
            report["oracle"] = {"optimum": opt.optimum_value, "witness": opt.witness,
                                "ratio": Fraction(sol.touched, opt.optimum_value)
                                if opt.optimum_value else (1 if sol.touched == 0 else None)}
            if args.audit:
                audit["ratio_le_2"] = sol.touched <= 2 * opt.optimum_value
        if args.audit:
            audit["weight_ge_W"] = sol.weight >= target

    elif args.problem == "mwec":
        budget = int(_param(args, params, "budget", "budget"))
        report["parameters"] = {"budget": budget, "method": args.method}
        if args.method == "dp":
            sol = mwec_dp(MwecInstance(g, budget), threads=args.threads)
        else:
            res = mwec_via_fcec(g, budget, alpha=args.alpha, tau=args.tau,
                                retries=args.retries, seed=args.seed)
            sol = res.solution
            report["parameters"].update(alpha=args.alpha, tau=args.tau,
                                        retries=args.retries, seed=args.seed)
            report["exhausted"] = res.exhausted
            if res.exhausted:
                print("warning: no sampling round avoided both bad events", file=sys.stderr)
        report["solution"] = {"set": sol.members, "weight": sol.weight, "touched": sol.touched}
        if want_oracle and (args.oracle or g.n <= args.oracle_cap):
            opt = _oracle(args, oracles.brute_mwec, g, budget)
            report["oracle"] = {"optimum": opt.optimum_value, "witness": opt.witness,
                                "ratio": Fraction(opt.optimum_value, sol.weight)
                                if sol.weight else (1 if opt.optimum_value == 0 else None)}
            if args.audit and args.method == "dp":
                audit["half_optimal"] = 2 * sol.weight >= opt.optimum_value
        if args.audit:
            audit["feasible"] = sol.touched <= budget

    else:
        u = vertex_set(g, _ids(_param(args, params, "U", "U")))
        report["parameters"] = {"U": u}
        w, rho = density_aug(g, u)
        report["solution"] = {"set": w, "rho": rho}
        if want_oracle and (args.oracle or g.n - len(u) <= args.oracle_cap):
            opt = _oracle(args, oracles.brute_density_aug, g, u)
            report["oracle"] = {"optimum": opt.optimum_value, "witness": opt.witness}
            if args.audit:
                audit["exact"] = opt.optimum_value == rho
        if args.audit:
            audit["set_ratio"] = ratio(g, u, w) == rho

    elapsed = time.perf_counter() - started
    if args.audit:
        report["audit"] = {"checks": audit, "passed": all(audit.values())}
    if args.timing:
        report["wall_time_s"] = round(elapsed, 6)
    emit(report)
    rows = [("problem", args.problem), ("n, m", f"{g.n}, {g.m}")]
    rows += [(k, v) for k, v in report["solution"].items()]
    if "oracle" in report:
        rows.append(("oracle", report["oracle"]["optimum"]))
    if args.audit:
        rows.append(("audit", "pass" if report["audit"]["passed"] else "FAIL"))
    rows.append(("wall time", f"{elapsed:.4f}s"))
    _table(rows)
    if args.audit and not report["audit"]["passed"]:
        return EXIT_AUDIT
    return EXIT_OK


# -- gap --------------------------------------------------------------------------

def cmd_gap(args) -> int:
    if args.n < 16:
        raise UsageError(f"gap experiment needs n >= 16, got {args.n}")
    rep = gap_experiment(args.n, args.seed)
    if args.out:
        Path(args.out).write_text(rep.to_kv(), encoding="utf-8")
    if args.format == "kv":
        sys.stdout.write(rep.to_kv())
    else:
        print(rep.to_json())
    _table([(k, v) for k, v in rep.fields().items()])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=int(_env("SEED", 0)),
                        help="RNG seed (env EDGECOVER_SEED)")
    common.add_argument("--threads", type=int, default=int(_env("THREADS", 1)),
                        help="worker threads for the MWEC guesses")
    common.add_argument("--oracle-cap", type=int, default=int(_env("ORACLE_CAP", oracles.DEFAULT_CAP)),
                        help="largest n the exhaustive oracle will accept")
    common.add_argument("--tau", type=_fraction, default=_fraction(_env("TAU", "1/2")),
                        help="reduction slack, e.g. 1/2")
    common.add_argument("--alpha", type=_fraction, default=_fraction(_env("ALPHA", "2")),
                        help="FCEC approximation factor assumed by the reduction")
    common.add_argument("--retries", type=int, default=int(_env("RETRIES", 20)),
                        help="sampling rounds per guess in the reduction")

    parser = argparse.ArgumentParser(prog="edgecover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write an instance file")
    gen.add_argument("kind", choices=["gnp", "star", "path", "complete"])
    gen.add_argument("size", type=int, help="vertex count (leaf count for star)")
    gen.add_argument("--p", type=_fraction, default=None, help="gnp edge probability")
    gen.add_argument("--weights", default="uniform", help="uniform | random:LO:HI | w0,w1,...")
    gen.add_argument("--param", action="append", help="embed KEY=VALUE problem parameter")
    gen.add_argument("--out", "-o", default=None)
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", parents=[common], help="run a solver on an instance")
    solve.add_argument("problem", choices=["fcec", "mwec", "density"])
    solve.add_argument("instance")
    solve.add_argument("--W", type=int, default=None, help="fcec target weight")
    solve.add_argument("--budget", type=int, default=None, help="mwec edge budget m'")
    solve.add_argument("--U", default=None, help="density: comma-separated vertex ids")
    solve.add_argument("--method", choices=["dp", "reduction"], default="dp",
                       help="mwec: direct DP or the FCEC-based reduction")
    solve.add_argument("--oracle", action="store_true", help="also run the exhaustive solver")
    solve.add_argument("--audit", action="store_true",
                       help="re-check feasibility and the guarantee; exit 5 on failure")
    solve.add_argument("--timing", action="store_true", help="add wall time to the JSON line")
    solve.set_defaults(func=cmd_solve)

    gap = sub.add_parser("gap", parents=[common], help="integrality-gap experiment")
    gap.add_argument("--n", type=int, required=True, help="vertex count, at least 16")
    gap.add_argument("--out", default=None, help="write key=value report here")
    gap.add_argument("--format", choices=["json", "kv"], default="json")
    gap.set_defaults(func=cmd_gap)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapExceededError as exc:
        print(f"oracle refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
