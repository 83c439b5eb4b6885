"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 budget exhaustion, 3 internal
inconsistency (two routes disagreeing).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import files
from .bounds import core_bounds_report, pm_bounds_report
from .coloring import EdgeColoring, mono_pm_profile
from .core_ramsey import BlockCover, exact_core_ramsey
from .path_matching import deficiency
from .pm_ramsey import exact_pm_ramsey, find_lower_witness
from .reproduce import render_report, run_report
from .results import BudgetExceededError, RamseyResult, RouteDisagreementError
from .graphs import bits

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INCONSISTENT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit_(message)


class SystemExit_(Exception):
    pass


def parse_targets(text: str) -> list[int]:
    """Comma-separated thresholds with p*r shorthand: "5,5,5" or "6*10"."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "*" in chunk:
            base, times = chunk.split("*", 1)
            out.extend([int(base)] * int(times))
        else:
            out.append(int(chunk))
    if not out:
        raise ValueError("no targets given")
    return out


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-budget", type=int, default=50_000_000,
                   help="maximum search nodes before giving up")
    p.add_argument("--time-budget", type=float, default=None,
                   help="wall-clock budget in seconds")
    p.add_argument("--threads", type=int, default=1,
                   help="worker count for the searches")


def _print_progress(snapshot: dict) -> None:
    rate = snapshot["nodes"] / max(snapshot["elapsed"], 1e-9)
    hist = snapshot["depth_histogram"]
    deepest = max((d for d, c in enumerate(hist) if c), default=0)
    print(f"progress: {snapshot['nodes']} nodes ({rate:,.0f}/s), "
          f"{snapshot['leaves']} leaves, deepest edge {deepest}",
          file=sys.stderr)


def _result_text(res: RamseyResult) -> str:
    lines = [f"targets: {','.join(str(t) for t in res.targets)}",
             f"value: {res.value}",
             f"method: {res.method}"]
    if isinstance(res.lower_witness, EdgeColoring):
        lines.append(f"witness: coloring of K_{res.lower_witness.n} "
                     f"with profile {mono_pm_profile(res.lower_witness)}")
    elif isinstance(res.lower_witness, BlockCover):
        lines.append(f"witness: cover of K_{res.lower_witness.n} "
                     f"with block sizes {res.lower_witness.block_sizes()}")
    lines.append(f"stats: {res.stats.nodes} nodes, {res.stats.millis} ms")
    return "\n".join(lines)


def cmd_exact(args) -> int:
    targets = parse_targets(args.targets)
    cache = files.ResultCache(args.cache) if args.cache != "none" else None
    key = files.cache_key("PM" if args.kind == "pm" else "1C", targets)
    if cache is not None and not args.no_cache:
        hit = cache.get(key)
        if hit is not None:
            if args.json:
                print(json.dumps({"targets": sorted(targets, reverse=True),
                                  "value": hit["value"], "method": hit["method"],
                                  "cached": True}))
            else:
                print(f"value: {hit['value']} (cached, {hit['method']})")
            return EXIT_OK
    kw = dict(node_budget=args.node_budget, time_budget=args.time_budget,
              workers=args.threads)
    if args.kind == "pm":
        if args.verbose:
            kw["progress"] = _print_progress
        res = exact_pm_ramsey(targets, strategy=args.strategy, **kw)
    else:
        res = exact_core_ramsey(targets, **kw)
    if cache is not None:
        cache.put(key, res.value, res.method)
    if args.json:
        print(json.dumps(files.result_to_json(res)))
    else:
        print(_result_text(res))
    return EXIT_OK


def cmd_bounds(args) -> int:
    targets = parse_targets(args.targets)
    pm = pm_bounds_report(targets)
    core = core_bounds_report(targets)
    if args.json:
        def dump(rep):
            return [{"name": e.name, "kind": e.kind, "value": e.value,
                     "condition_holds": e.condition_holds} for e in rep.entries]
        print(json.dumps({"targets": sorted(targets, reverse=True),
                          "PM": dump(pm), "1C": dump(core)}))
        return EXIT_OK
    for rep in (pm, core):
        print(f"{rep.quantity} bounds for {tuple(rep.targets)}:")
        for e in rep.entries:
            cond = ""
            if e.condition_holds is not None:
                cond = "  (exact)" if e.condition_holds else "  (condition fails)"
            print(f"  {e.name:<22} {e.kind:<18} {e.value}{cond}")
    return EXIT_OK


def cmd_witness(args) -> int:
    targets = parse_targets(args.targets)
    kw = dict(node_budget=args.node_budget, time_budget=args.time_budget,
              workers=args.threads)
    if args.kind == "pm":
        witness = find_lower_witness(args.n, targets, **kw)
        if witness is None:
            print(f"no bad coloring of K_{args.n} found", file=sys.stderr)
            return EXIT_USAGE
        payload = files.coloring_to_text(witness)
        summary = (f"coloring of K_{witness.n}, "
                   f"pm profile {mono_pm_profile(witness)}")
    else:
        res = exact_core_ramsey(targets, **kw)
        cover = res.lower_witness
        if not isinstance(cover, BlockCover) or cover.n != args.n:
            print(f"exact value is {res.value}; no cover witness on K_{args.n}",
                  file=sys.stderr)
            return EXIT_USAGE
        payload = json.dumps(files.cover_to_json(cover), indent=1) + "\n"
        summary = f"cover of K_{cover.n}, block sizes {cover.block_sizes()}"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(f"{summary} -> {args.output}")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_deficiency(args) -> int:
    with open(args.graph, "r", encoding="utf-8") as fh:
        g = files.graph_from_text(fh.read())
    pd, cert = deficiency(g)
    if args.json:
        print(json.dumps({
            "n": g.n,
            "deficiency": pd,
            "max_path_matching_order": g.n - pd,
            "lv_set": [v + 1 for v in bits(cert.lv_set)],
            "isolated_witness": [v + 1 for v in bits(cert.isolated_witness)],
        }))
    else:
        print(f"deficiency: {pd}")
        print(f"max path-matching order: {g.n - pd}")
        print(f"LV set (1-indexed): {[v + 1 for v in bits(cert.lv_set)]}")
        print(f"isolated after removal: {[v + 1 for v in bits(cert.isolated_witness)]}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    rows = run_report(include_slow=args.include_slow, only=args.only,
                      workers=args.threads)
    if args.json:
        print(json.dumps([{
            "name": r.name, "expected": r.expected, "computed": r.computed,
            "passed": r.passed, "millis": r.millis, "slow": r.slow,
        } for r in rows]))
    else:
        print(render_report(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ramsey-pm",
                description="Exact Ramsey numbers of path-matchings and 1-cores")
    sub = p.add_subparsers(dest="command", required=True)

    px = sub.add_parser("exact", help="compute an exact Ramsey value")
    px.add_argument("kind", choices=["pm", "core"])
    px.add_argument("--targets", required=True,
                    help="thresholds, e.g. 5,5,5 or 6*10")
    px.add_argument("--strategy", default="auto",
                    choices=["auto", "search", "reduction", "formula"])
    px.add_argument("--cache", default=files.default_cache_path(),
                    help="cache file path, or 'none'")
    px.add_argument("--no-cache", action="store_true",
                    help="ignore cached values but still record the result")
    px.add_argument("--json", action="store_true")
    px.add_argument("--verbose", action="store_true",
                    help="report search progress (nodes/sec, depth histogram)")
    _budget_args(px)
    px.set_defaults(fn=cmd_exact)

    pb = sub.add_parser("bounds", help="closed-form bounds for a target vector")
    pb.add_argument("--targets", required=True)
    pb.add_argument("--json", action="store_true")
    pb.set_defaults(fn=cmd_bounds)

    pw = sub.add_parser("witness", help="produce a lower-bound witness")
    pw.add_argument("kind", choices=["pm", "core"])
    pw.add_argument("--targets", required=True)
    pw.add_argument("-n", type=int, required=True,
                    help="vertex count of the witness (value - 1)")
    pw.add_argument("-o", "--output", default=None)
    _budget_args(pw)
    pw.set_defaults(fn=cmd_witness)

    pd = sub.add_parser("deficiency", help="path-matching deficiency of a graph file")
    pd.add_argument("graph")
    pd.add_argument("--json", action="store_true")
    pd.set_defaults(fn=cmd_deficiency)

    pr = sub.add_parser("reproduce", help="recompute and check the published values")
    pr.add_argument("--include-slow", action="store_true")
    pr.add_argument("--json", action="store_true")
    pr.add_argument("--only", default=None, help="regex filter on row names")
    pr.add_argument("--threads", type=int, default=1)
    pr.set_defaults(fn=cmd_reproduce)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit_ as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except BudgetExceededError as err:
        print(f"budget exhausted: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except RouteDisagreementError as err:
        print(f"internal inconsistency: {err}", file=sys.stderr)
        print(json.dumps(err.details, default=str), file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
