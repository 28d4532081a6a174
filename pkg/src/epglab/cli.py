"""Command-line front end.

    epg info   <expr>                      structural constants
    epg check  <expr> [--props ...] [--route ...] [--tier ...]
    epg verify <suite> [--tier ...] [--out DIR] [--budget S] [--no-figure]
    epg export <expr> --format dot|edges|json --out FILE

Exit codes: 0 ok, 2 parse error, 3 build error, 4 route disagreement or
invariant violation.  EPG_CAP overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .epgcore import build_enhanced_power_graph
from .expr import ExprSemanticError, ExprSyntaxError, parse
from .graphs import GraphTooLarge
from .groups import CapExceeded, GroupError
from .lab import SUITES, classify_group, group_and_catalog, run_suite
from .zoo import OrderMismatch, UnknownSpec

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUILD = 3
EXIT_DISAGREE = 4

TIER_LIMITS = {"fast": 10_000, "standard": 400_000, "extended": 1_000_000}

ALL_PROPS = ("cograph", "chordal", "c4free", "diamond", "block",
             "qthreshold", "threshold", "eppo")
PROP_ALIASES = {"diamond": "diamond_free"}


def _fail(code: int, message: str) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return code


def _parse_expr(text: str):
    return parse(text)


def cmd_info(args) -> int:
    try:
        _parse_expr(args.expr)
    except (ExprSyntaxError, ExprSemanticError) as e:
        return _fail(EXIT_PARSE, str(e))
    try:
        G, cat = group_and_catalog(args.expr)
    except (GroupError, UnknownSpec, OrderMismatch) as e:
        return _fail(EXIT_BUILD, str(e))
    out = {
        "spec": args.expr,
        "order": G.order,
        "maximal_cyclic_subgroups": len(cat.subgroups),
        "cycliciser_order": len(cat.cyc),
        "maximal_elements": len(cat.maximal_elements),
        "simplicial": len(cat.simplicial),
        "omega": cat.omega,
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        _parse_expr(args.expr)
    except (ExprSyntaxError, ExprSemanticError) as e:
        return _fail(EXIT_PARSE, str(e))
    props = [p.strip() for p in args.props.split(",")] if args.props else list(ALL_PROPS)
    bad = [p for p in props if p not in ALL_PROPS]
    if bad:
        return _fail(EXIT_PARSE, f"unknown properties: {bad}")
    try:
        report = classify_group(args.expr, tier=args.tier, route=args.route)
        if report["order"] > TIER_LIMITS[args.tier]:
            return _fail(EXIT_BUILD,
                         f"group order {report['order']} exceeds tier "
                         f"'{args.tier}' limit {TIER_LIMITS[args.tier]}")
    except (CapExceeded, GraphTooLarge, GroupError, UnknownSpec, OrderMismatch) as e:
        return _fail(EXIT_BUILD, str(e))
    wanted = {PROP_ALIASES.get(p, p) for p in props}
    report["predicates"] = {k: v for k, v in report["predicates"].items()
                            if k in wanted}
    print(json.dumps(report, indent=2, default=str))
    if not report["consistent"]:
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        return _fail(EXIT_PARSE,
                     f"unknown suite '{args.suite}'; options: {sorted(SUITES)}")
    report = run_suite(args.suite, tier=args.tier, out_dir=args.out,
                       budget=args.budget, figure=not args.no_figure)
    print(report["path"])
    if report.get("figure"):
        print(report["figure"])
    return EXIT_OK if report["pass"] else EXIT_DISAGREE


def cmd_export(args) -> int:
    try:
        _parse_expr(args.expr)
    except (ExprSyntaxError, ExprSemanticError) as e:
        return _fail(EXIT_PARSE, str(e))
    try:
        G, cat = group_and_catalog(args.expr)
        which = "power" if args.graph == "power" else "enhanced"
        if which == "power":
            from .epgcore import build_power_graph
            epg = build_power_graph(G, cat)
        else:
            epg = build_enhanced_power_graph(G, cat)
    except (CapExceeded, GraphTooLarge, GroupError, UnknownSpec, OrderMismatch) as e:
        return _fail(EXIT_BUILD, str(e))

    g = epg.graph
    edges = sorted((u, v) for u, v in g.edges())
    lines: list[str] = []
    if args.format == "dot":
        lines.append("graph epg {")
        for v in range(g.n):
            label = f"{G.render(epg.vertex_ids[v])} ord={epg.order_label[v]}"
            lines.append(f'  {v} [label="{label}"];')
        for u, v in edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        payload = "\n".join(lines) + "\n"
    elif args.format == "edges":
        payload = "".join(f"{u} {v}\n" for u, v in edges)
    else:
        payload = json.dumps({
            "spec": args.expr,
            "graph": which,
            "order": G.order,
            "vertices": [{"id": v, "order": epg.order_label[v],
                          "label": G.render(epg.vertex_ids[v])}
                         for v in range(g.n)],
            "edges": [[u, v] for u, v in edges],
        }, indent=2) + "\n"
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(payload)
    print(args.out)
    return EXIT_OK


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="epg",
                                 description="enhanced power graphs of finite groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural constants of a group")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("check", help="classify a group by both routes")
    p.add_argument("expr")
    p.add_argument("--props", default="",
                   help=f"comma list from {','.join(ALL_PROPS)}")
    p.add_argument("--route", choices=("graph", "group", "both"), default="both")
    p.add_argument("--tier", choices=("fast", "standard", "extended"),
                   default="standard")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--tier", choices=("fast", "standard", "extended"),
                   default="standard")
    p.add_argument("--out", default="reports")
    p.add_argument("--budget", type=float, default=600.0,
                   help="wall-clock budget (s) for oversized graph scans")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export", help="export a graph")
    p.add_argument("expr")
    p.add_argument("--format", choices=("dot", "edges", "json"), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--graph", choices=("enhanced", "power"), default="enhanced")
    p.set_defaults(fn=cmd_export)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
