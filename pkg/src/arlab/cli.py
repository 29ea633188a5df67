"""Command-line entry point: ``arlab <subcommand>``.

Subcommands: formula, construct, detect, find, oracle, crosscheck.  The flags
--seed, --threads and --format are accepted before or after the subcommand;
``ARLAB_THREADS`` overrides ``--threads``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .constructions import build_lower_bound
from .core import ForestShape, read_coloring, write_coloring
from .crosscheck import DEFAULT_ORACLE_BUDGET, DEFAULT_TRIALS, run_crosscheck
from .detector import detect_by_enumeration, find_rainbow_forest
from .finder import DEFAULT_MAX_RADIUS, find_constructive
from .oracle import compute_ar, compute_ar_triangle


def parse_params(text: str) -> dict:
    """``k=2,t=3,n=12`` -> dict; ``p=2:3:4`` gives a list, ``regime=C`` stays a string."""
    out: dict = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, _, val = item.partition("=")
        key = key.strip()
        if not val:
            raise argparse.ArgumentTypeError(f"bad parameter {item!r}")
        if key == "p":
            out[key] = [int(x) for x in val.split(":")]
        elif key == "regime":
            out[key] = val.strip()
        else:
            out[key] = int(val)
    return out


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "text":
        for key, val in obj.items():
            print(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")
    else:
        print(json.dumps(obj, indent=2))


def _threads(args) -> int:
    env = os.environ.get("ARLAB_THREADS")
    return max(1, int(env)) if env else args.threads


def cmd_formula(args) -> int:
    res = catalog.evaluate(args.family, **parse_params(args.params))
    _emit(res.to_dict(), args.format)
    return 0


def cmd_construct(args) -> int:
    c = build_lower_bound(args.k, args.t)
    if args.out:
        write_coloring(c, args.out)
    else:
        print(c.to_json())
    return 0


def cmd_detect(args) -> int:
    c = read_coloring(args.coloring)
    shape = ForestShape(args.k, args.t)
    if args.oracle:
        out = detect_by_enumeration(c, shape)
    else:
        budget = args.sub_budget if args.sub_budget is not None else args.budget
        out = find_rainbow_forest(c, shape, budget=budget, threads=_threads(args))
    _emit({"n": c.n, "shape": [shape.k, shape.t], **out.to_dict()}, args.format)
    return 0


def cmd_find(args) -> int:
    c = read_coloring(args.coloring)
    res = find_constructive(c, ForestShape(args.k, args.t), args.max_radius, _threads(args))
    body = res.to_dict() if args.trace else {"witness": res.witness.to_dict()}
    body["fallback_used"] = res.fallback_used
    _emit(body, args.format)
    return 0


def cmd_oracle(args) -> int:
    budget = args.sub_budget if args.sub_budget is not None else args.budget
    if args.triangle:
        res = compute_ar_triangle(args.n, node_budget=budget)
    else:
        if args.k is None or args.t is None:
            raise SystemExit("oracle: give --k and --t, or --triangle")
        res = compute_ar(args.n, ForestShape(args.k, args.t), node_budget=budget)
    _emit(res.to_dict(), args.format)
    return 0


def cmd_crosscheck(args) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_ORACLE_BUDGET
    report = run_crosscheck(
        args.suite, budget=budget, seed=args.seed, trials=args.trials, threads=_threads(args)
    )
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, suppress: bool) -> None:
        # subcommands repeat the flags with SUPPRESS so they only override when given
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        parser.add_argument("--seed", type=int, default=dflt(0), help="64-bit seed (default 0)")
        parser.add_argument("--threads", type=int, default=dflt(1), help="worker threads (default 1)")
        parser.add_argument("--format", choices=("json", "text", "csv"), default=dflt("json"))

    p = argparse.ArgumentParser(prog="arlab", description=__doc__.splitlines()[0])
    global_flags(p, suppress=False)
    p.add_argument("--budget", type=int, default=None, help="search node budget (default: none)")
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formula", parents=[common], help="evaluate a catalog formula")
    f.add_argument("--family", required=True, choices=catalog.FAMILIES)
    f.add_argument("--params", default="", help="e.g. k=1,t=2 or n=9,t=2,n_min=9 or p=2:3,n=40")
    f.set_defaults(func=cmd_formula)

    c = sub.add_parser("construct", parents=[common], help="emit the extremal coloring for kP3 ∪ tP2")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("detect", parents=[common], help="search a coloring for a rainbow kP3 ∪ tP2")
    d.add_argument("--coloring", required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--budget", dest="sub_budget", type=int, default=None)
    d.add_argument("--oracle", action="store_true", help="use copy enumeration (n <= 10)")
    d.set_defaults(func=cmd_detect)

    fd = sub.add_parser("find", parents=[common], help="constructive witness search by induction on k")
    fd.add_argument("--coloring", required=True)
    fd.add_argument("--k", type=int, required=True)
    fd.add_argument("--t", type=int, required=True)
    fd.add_argument("--max-radius", type=int, default=DEFAULT_MAX_RADIUS)
    fd.add_argument("--trace", action="store_true")
    fd.set_defaults(func=cmd_find)

    o = sub.add_parser("oracle", parents=[common], help="exact AR value for tiny n")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--k", type=int)
    o.add_argument("--t", type=int)
    o.add_argument("--triangle", action="store_true")
    o.add_argument("--budget", dest="sub_budget", type=int, default=None)
    o.set_defaults(func=cmd_oracle)

    x = sub.add_parser("crosscheck", parents=[common], help="confront formulas with oracle values and constructions")
    x.add_argument("--suite", choices=("base", "extended"), default="base")
    x.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    x.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    x.set_defaults(func=cmd_crosscheck)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"arlab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
