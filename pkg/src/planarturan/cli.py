"""Command line front-end.

Exit codes: 0 success / property holds; 1 property fails or nothing
found; 2 usage error; 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import store
from .constructions import FAMILIES, ConstructionError
from .formulas import (
    FormulaRangeError,
    NoFormulaError,
    formula_value,
    prop13_classify,
    verify_verdict,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .graphs import Graph
from .oracle import (
    BudgetExhausted,
    ExpensiveCensusError,
    SearchBudget,
    enumerate_triangulations,
    exact_planar_turan,
    search_witness,
)
from .patterns import ConePath, Explicit, Fan, PatternSpec, Star, Wheel, pattern_match, pattern_name
from .verification import THEOREM_SUITES

USAGE_ERROR = 2
BUDGET_ERROR = 3


def parse_pattern(text: str) -> PatternSpec:
    """Pattern mini-grammar: wheel:K, star:T, fan:T,R, conepath:T, g6:CODE."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"pattern {text!r} missing ':'")
    try:
        if kind == "wheel":
            return Wheel(int(rest))
        if kind == "star":
            return Star(int(rest))
        if kind == "fan":
            t, _, r = rest.partition(",")
            return Fan(int(t), int(r) if r else 3)
        if kind == "conepath":
            return ConePath(int(rest))
        if kind == "g6":
            return Explicit(from_graph6(rest))
    except ValueError as exc:
        raise ValueError(f"bad pattern {text!r}: {exc}") from exc
    raise ValueError(f"unknown pattern kind {kind!r}")


def _load_graph(text: str) -> Graph:
    if text.startswith("@"):
        return from_graph6(Path(text[1:]).read_text())
    return from_graph6(text)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _budget(args) -> SearchBudget | None:
    if getattr(args, "budget", None) is None and getattr(args, "max_deletions", None) is None:
        return None
    return SearchBudget(max_deletions=getattr(args, "max_deletions", None),
                        seconds=getattr(args, "budget", None))


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.family not in FAMILIES:
        print(f"unknown family {args.family!r}; known: {', '.join(sorted(FAMILIES))}",
              file=sys.stderr)
        return USAGE_ERROR
    builder, wanted = FAMILIES[args.family]
    params = {}
    for name in wanted:
        value = getattr(args, name if name != "i" else "index")
        if value is None:
            print(f"family {args.family} needs --{name}", file=sys.stderr)
            return USAGE_ERROR
        params[name] = value
    try:
        g = builder(**params)
    except (ValueError, ConstructionError) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return USAGE_ERROR
    body = {"g6": to_graph6(g), "dot": to_dot(g).rstrip("\n"),
            "text": "\n".join(f"{v}: {' '.join(map(str, g.neighbors(v)))}"
                              for v in range(g.n))}[args.format]
    _emit(args, {"family": args.family, "params": params, "n": g.n,
                 "edges": g.edge_count, "graph6": to_graph6(g)}, body)
    return 0


def cmd_check(args) -> int:
    spec = parse_pattern(args.pattern)
    g = _load_graph(args.graph)
    match = pattern_match(g, spec, guard=max(16, g.n))
    free = match is None
    payload = {"pattern": pattern_name(spec), "free": free,
               "match": list(match.mapping) if match else None}
    _emit(args, payload,
          "free" if free else f"contains {pattern_name(spec)} at {list(match.mapping)}")
    return 0 if free else 1


def cmd_enumerate(args) -> int:
    try:
        census = enumerate_triangulations(args.n, cache_root=args.cache,
                                          expensive=args.expensive,
                                          processes=args.threads)
    except ExpensiveCensusError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    path = store.census_path(store.cache_root(args.cache), args.n)
    _emit(args, {"n": args.n, "count": len(census), "path": str(path)},
          f"{len(census)} triangulation classes on {args.n} vertices -> {path}")
    return 0


def cmd_exact(args) -> int:
    spec = parse_pattern(args.pattern)
    try:
        value = exact_planar_turan(args.n, spec, budget=_budget(args),
                                   cache_root=args.cache, expensive=args.expensive,
                                   processes=args.threads)
    except ExpensiveCensusError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    payload = {"n": args.n, "pattern": pattern_name(spec), "value": value.to_json()}
    _emit(args, payload, str(value))
    return 0 if value.exact else BUDGET_ERROR


def _parse_profile(text: str) -> dict[int, int]:
    out = {}
    for part in text.split(","):
        deg, _, cnt = part.partition(":")
        out[int(deg)] = int(cnt)
    return out


def cmd_search(args) -> int:
    free_of = [parse_pattern(p) for p in args.pattern or []]
    profile = _parse_profile(args.profile) if args.profile else None
    e = args.e
    if e is None:
        if profile is None:
            print("search needs --e or a full --profile", file=sys.stderr)
            return USAGE_ERROR
        total = sum(d * c for d, c in profile.items())
        if total % 2:
            print("degree sum must be even", file=sys.stderr)
            return USAGE_ERROR
        e = total // 2
    try:
        g = search_witness(args.n, e, free_of=free_of, profile=profile,
                           profile_exact=args.profile_exact or profile is not None,
                           max_degree=args.max_degree, budget=_budget(args),
                           cache_root=args.cache, expensive=args.expensive)
    except ExpensiveCensusError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    if g is None:
        _emit(args, {"n": args.n, "e": e, "found": False}, "none (verified)")
        return 1
    _emit(args, {"n": args.n, "e": e, "found": True, "graph6": to_graph6(g)},
          to_graph6(g))
    return 0


def cmd_formula(args) -> int:
    spec = parse_pattern(args.pattern)
    try:
        value = formula_value(spec, args.n)
    except FormulaRangeError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except NoFormulaError as exc:
        _emit(args, {"applies": False, "reason": str(exc)}, f"no theorem applies: {exc}")
        return 1
    payload = {"n": args.n, "pattern": pattern_name(spec), "applies": True,
               "value": value.to_json()}
    _emit(args, payload, f"{value} ({value.provenance})")
    return 0


def cmd_classify(args) -> int:
    h = _load_graph(args.graph)
    verdict = prop13_classify(h, args.n)
    payload = verdict.to_json() | {"n": args.n}
    if verdict.covered and args.verify:
        payload["verified"] = verify_verdict(verdict, h, args.n)
    human = (f"condition {verdict.condition}, witness {verdict.witness}, "
             f"valid from n = {verdict.min_n}" if verdict.covered else "not covered")
    _emit(args, payload, human)
    return 0 if verdict.covered else 1


def cmd_verify_theorem(args) -> int:
    suite = THEOREM_SUITES[args.id]
    results = suite(cache_root=args.cache, max_n=args.max_n, expensive=args.expensive)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"id": args.id, "pass": ok,
                          "checks": [r.to_json() for r in results]}, sort_keys=True))
    else:
        width = max(len(r.label) for r in results)
        for r in results:
            line = f"{r.label:<{width}}  {'PASS' if r.ok else 'FAIL'}"
            if not r.ok and r.detail:
                line += f"  ({r.detail})"
            print(line)
        print(f"theorem {args.id}: {'PASS' if ok else 'FAIL'} "
              f"({sum(r.ok for r in results)}/{len(results)} checks)")
    return 0 if ok else 1


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-turan",
        description="Extremal planar graph constructions, pattern checks, "
                    "exhaustive search, and theorem verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cache", default=None,
                       help="cache directory (default ./.planarturan-cache or "
                            f"${store.ENV_VAR})")
        p.add_argument("--expensive", action="store_true",
                       help="allow the large 13/14-vertex censuses")

    p = sub.add_parser("construct", help="build a named extremal family member")
    common(p)
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--i", dest="index", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--format", choices=("g6", "dot", "text"), default="g6")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("check", help="decide pattern-freeness of a graph")
    common(p)
    p.add_argument("--pattern", required=True,
                   help="wheel:K | star:T | fan:T,R | conepath:T | g6:CODE")
    p.add_argument("--graph", required=True, help="graph6 string or @file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="generate/load the triangulation census")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("exact", help="exact planar Turán value by exhaustive search")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--max-deletions", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("search",
                       help="find a planar graph by vertex/edge count, "
                            "freeness, and degree constraints (or prove none)")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, default=None)
    p.add_argument("--pattern", action="append",
                   help="forbidden pattern, repeatable")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--profile", default=None,
                   help="degree profile as 'deg:count,...', e.g. 4:1,5:10")
    p.add_argument("--profile-exact", action="store_true")
    p.add_argument("--budget", type=float, default=None)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("formula", help="theorem-backed value or bound")
    common(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_formula)

    p = sub.add_parser("classify", help="sufficient-condition classifier for 3n-6")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="also build the witness and check H-freeness")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify-theorem", help="run one theorem's verification suite")
    common(p)
    p.add_argument("--id", required=True, choices=sorted(THEOREM_SUITES))
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(fn=cmd_verify_theorem)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExhausted as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": "budget-exhausted", "detail": str(exc)}))
        else:
            print(f"budget exhausted: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except (ValueError, OSError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": "usage", "detail": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
