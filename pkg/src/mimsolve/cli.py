"""``mimsolve`` command line.

Exit codes: 0 success, 1 a check came out negative, 2 unreadable input,
3 width validation failed, 4 precondition violated, 5 size guard hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io
from .chain import compute_chain_orders, dump_orders, verify_chain_orders
from .dp import CATALOG, EXTRA, solve
from .errors import (ContractError, InputError, InvariantError, ParseError, PreconditionError,
                     SizeError, WidthError)
from .generators import interval_graph, permutation_graph
from .graph import Graph, certify, complement
from .hardness import PRESETS, build_reduction, certify_reduction, manifest
from .layout import (cograph_from_cotree, cotree_layout, interval_layout, layout_from_order,
                     permutation_layout, resolve_workers, validate_width)
from .oracles import (TWO_PART, brute_max_induced, brute_min_deletion, brute_mimwidth_le,
                      brute_vertex_cover)

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_WIDTH, EXIT_PRECONDITION, EXIT_GUARD = 0, 1, 2, 3, 4, 5


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_pair(args) -> tuple[Graph, object]:
    g = io.read_dimacs(_read(args.graph))
    layout = io.read_layout(_read(args.layout), g) if args.layout else None
    return g, layout


def cmd_solve(args) -> int:
    g, layout = _load_pair(args)
    target = complement(g) if args.complement else g
    sol = solve(target, layout, args.problem, connected=args.connected, prune=not args.no_prune)
    sol_arg = sol.parts if len(sol.parts) > 1 else sol.parts[0]
    spec = (CATALOG.get(args.problem) or EXTRA[args.problem])
    # never trust the table alone
    if not (sol.certified and certify(spec.certify_as, target, sol_arg, connected=args.connected)):
        raise InvariantError("solver produced a witness that fails certification")
    stats = dict(sol.stats)
    if args.no_timing:
        stats["runtime_ms"] = 0
    out = {
        "problem": sol.problem,
        "connected": sol.connected,
        "complement": args.complement,
        "size": sol.size,
        "vertices": [g.label(v) for v in sorted(sol.vertices)],
        "parts": [[g.label(v) for v in sorted(p)] for p in sol.parts],
        "certified": True,
        "stats": stats,
    }
    _emit(_dumps(out), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g, layout = _load_pair(args)
    if layout is None:
        raise ParseError("verify needs --layout")
    target = complement(g) if args.complement else g
    report = validate_width(target, layout, args.width, workers=args.threads)
    out = {"ok": report.ok, "width_bound": args.width, "observed": report.width,
           "failing_node": report.failing_node}
    _emit(_dumps(out), args.output)
    if not report:
        leaves = sorted(g.label(v) for v in layout.vertices(report.failing_node))
        raise _Fail(EXIT_WIDTH, f"cut at node {report.failing_node} exceeds width {args.width}; "
                                f"inside: {' '.join(leaves)}")
    return EXIT_OK


def cmd_build(args) -> int:
    if args.intervals:
        intervals, labels = io.read_intervals(_read(args.intervals))
        g = Graph(len(intervals), interval_graph(intervals).edges(), labels)
        layout = interval_layout(intervals)
    elif args.permutation:
        perm = io.read_permutation(_read(args.permutation))
        g = permutation_graph(perm)
        layout = permutation_layout(perm)
    elif args.cotree:
        tree, labels = io.read_cotree(_read(args.cotree))
        g = Graph(len(labels), cograph_from_cotree(tree).edges(), labels)
        layout = cotree_layout(tree)
    else:
        if not args.graph:
            raise ParseError("--order needs --graph")
        g = io.read_dimacs(_read(args.graph))
        order = io.read_order(_read(args.order), g)
        try:
            layout = layout_from_order(order)
        except InputError as exc:
            raise ParseError(str(exc)) from None
    labels = g.labels
    _emit(io.write_layout(layout, labels), args.layout_out)
    if args.graph_out:
        _emit(io.write_dimacs(g), args.graph_out)
    return EXIT_OK


def cmd_chain_orders(args) -> int:
    g, layout = _load_pair(args)
    if layout is None:
        raise ParseError("chain-orders needs --layout")
    report = validate_width(g, layout, 1)
    if not report:
        raise _Fail(EXIT_WIDTH, f"cut at node {report.failing_node} is not a chain graph")
    if args.check:
        orders = io.read_orders_dump(_read(args.check), g, layout.size)
    else:
        orders = compute_chain_orders(g, layout)
        _emit(dump_orders(orders, g.labels), args.output)
    check = verify_chain_orders(g, layout, orders)
    if not check.ok:
        print(f"condition {check.condition} fails at node {check.node}: {check.detail}",
              file=sys.stderr)
        return EXIT_NEGATIVE
    if args.check:
        print("all chain-order conditions hold", file=sys.stderr)
    return EXIT_OK


def cmd_gen_hardness(args) -> int:
    h = io.read_dimacs(_read(args.vc_graph))
    red = build_reduction(h, args.preset)
    report = certify_reduction(red)
    info = manifest(red, report)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.name or args.preset
    (out / f"{stem}.col").write_text(io.write_dimacs(red.graph, f"hardness instance, preset {args.preset}"))
    (out / f"{stem}.nwk").write_text(io.write_layout(red.layout, red.graph.labels))
    (out / f"{stem}.json").write_text(_dumps(info))
    sys.stdout.write(_dumps(info))
    if not report:
        raise _Fail(EXIT_WIDTH, f"generated layout fails width {red.base.width_bound} "
                                f"at node {report.failing_node}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = io.read_dimacs(_read(args.graph))
    if args.query == "max-induced":
        res = brute_max_induced(args.problem, g, args.connected)
        parts = [[g.label(v) for v in sorted(p)] for p in res.parts]
        out = {"query": args.query, "problem": args.problem, "connected": args.connected,
               "size": res.size, "vertices": [g.label(v) for v in sorted(res.vertices)],
               "parts": parts}
    elif args.query == "min-deletion":
        out = {"query": args.query, "problem": args.problem, "connected": args.connected,
               "deletion": brute_min_deletion(args.problem, g, args.connected)}
    elif args.query == "vertex-cover":
        out = {"query": args.query, "k": args.k, "result": brute_vertex_cover(g, args.k)}
    else:
        out = {"query": args.query, "width": args.width,
               "result": brute_mimwidth_le(g, args.width)}
    _emit(_dumps(out), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    problems = sorted(CATALOG) + sorted(EXTRA)
    p = argparse.ArgumentParser(prog="mimsolve", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap (default: $MIMSOLVE_THREADS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a catalog problem on a width-1 layout")
    s.add_argument("--problem", required=True, choices=problems)
    s.add_argument("--graph", required=True)
    s.add_argument("--layout", required=True)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--complement", action="store_true",
                   help="solve on the complement graph with the same layout")
    s.add_argument("--no-prune", action="store_true", help="disable signature merging")
    s.add_argument("--no-timing", action="store_true",
                   help="report runtime_ms as 0 for byte-identical output")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check the mim-width of a layout")
    v.add_argument("--graph", required=True)
    v.add_argument("--layout", required=True)
    v.add_argument("--width", type=int, default=1)
    v.add_argument("--complement", action="store_true")
    v.add_argument("--output", "-o")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("build", help="build a layout from a class model")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--intervals")
    src.add_argument("--permutation")
    src.add_argument("--cotree")
    src.add_argument("--order")
    b.add_argument("--graph", help="graph file for --order")
    b.add_argument("--layout-out", "-o")
    b.add_argument("--graph-out")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("chain-orders", help="dump or check chain orders of a width-1 layout")
    c.add_argument("--graph", required=True)
    c.add_argument("--layout", required=True)
    c.add_argument("--check", help="verify this dump instead of computing one")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_chain_orders)

    h = sub.add_parser("gen-hardness", help="generate a hard instance from vertex cover")
    h.add_argument("--vc-graph", required=True)
    h.add_argument("--preset", required=True, choices=sorted(PRESETS))
    h.add_argument("--out-dir", default=".")
    h.add_argument("--name")
    h.set_defaults(func=cmd_gen_hardness)

    o = sub.add_parser("oracle", help="brute-force ground truth on small graphs")
    o.add_argument("--graph", required=True)
    o.add_argument("--query", default="max-induced",
                   choices=["max-induced", "min-deletion", "vertex-cover", "mimwidth-le"])
    o.add_argument("--problem", choices=sorted(set(problems) | set(TWO_PART) | {"cocluster", "independent"}),
                   default="cluster")
    o.add_argument("--connected", action="store_true")
    o.add_argument("--k", type=int, default=0)
    o.add_argument("--width", type=int, default=1)
    o.add_argument("--output", "-o")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.threads = resolve_workers(args.threads)
    os.environ.setdefault("MIMSOLVE_THREADS", str(args.threads))
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except WidthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WIDTH
    except (PreconditionError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
