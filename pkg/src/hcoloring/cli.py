"""Command line front end.

Exit codes: 0 property established, 1 definitive negative verdict,
2 usage or input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import catalog, formats
from .hcolor import (
    COLORABLE,
    NOT_COLORABLE,
    RESOURCE_LIMIT,
    EdgeMapping,
    SolveOptions,
    search,
    solve,
    verify,
)
from .multigraph import (
    GraphError,
    MultiGraph,
    bridges,
    build,
    chromatic_index,
    circuit_lengths,
    connected_components,
    find_perfect_matching,
    is_k_regular,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_TIMEOUT = 1800.0
_STATUS_EXIT = {COLORABLE: EXIT_OK, NOT_COLORABLE: EXIT_NO, RESOURCE_LIMIT: EXIT_LIMIT}


class UsageError(Exception):
    pass


def load_graph(spec: str) -> tuple[MultiGraph, str]:
    """Resolve ``@NAME`` or a file path; returns the graph and a certificate designator.

    File graphs are renumbered into sparse6 edge order so that edge ids in
    certificates survive an inline sparse6 designator.
    """
    if spec.startswith("@"):
        try:
            return catalog.named(spec).graph, spec
        except catalog.UnknownName as exc:
            raise UsageError(f"UnknownName: {exc.args[0]}") from None
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc.strerror}") from None
    try:
        g = formats.canonical_order(formats.parse_graph(text))
    except (GraphError, KeyError) as exc:
        raise UsageError(f"{spec}: {exc}") from None
    return g, formats.write_sparse6(g)


def _options(args) -> SolveOptions:
    return SolveOptions(
        node_limit=args.node_limit,
        time_limit=args.timeout,
        order_heuristic=getattr(args, "heuristic", "most_constrained"),
    )


def _stats_text(stats, timing: bool) -> str:
    s = f"nodes={stats.nodes} max_depth={stats.max_depth}"
    if timing:
        s += f" seconds={stats.wall_time:.3f}"
    return s


# --------------------------------------------------------------------------
# commands


def cmd_show(args) -> int:
    g, _ = load_graph(args.graph)
    if args.format == "sparse6":
        print(formats.write_sparse6(g))
    elif args.format == "graph6":
        print(formats.write_graph6(g))
    else:
        sys.stdout.write(formats.write_edgelist(g))
    return EXIT_OK


def invariants_report(g: MultiGraph) -> dict:
    degs = g.degrees()
    pm = find_perfect_matching(g)
    lengths = sorted(circuit_lengths(g))
    return {
        "order": g.n,
        "size": g.m,
        "degree_sequence": sorted(degs, reverse=True),
        "cubic": is_k_regular(g, 3),
        "components": len(connected_components(g)),
        "bridges": len(bridges(g)),
        "chromatic_index": chromatic_index(g) if g.m else 0,
        "perfect_matching": pm is not None,
        "circuit_lengths": lengths,
        "even_circuit_lengths": [k for k in lengths if k % 2 == 0],
    }


def cmd_invariants(args) -> int:
    g, _ = load_graph(args.graph)
    rep = invariants_report(g)
    for key, val in rep.items():
        if isinstance(val, bool):
            val = "yes" if val else "no"
        elif isinstance(val, list):
            val = "{" + ", ".join(map(str, val)) + "}" if "circuit" in key else " ".join(map(str, val))
        print(f"{key.replace('_', ' ')}: {val}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g, g_des = load_graph(args.graph)
    h, h_des = load_graph(args.pattern)
    found, exhausted, stats = search(g, h, _options(args), args.all or 1)
    if found:
        status = COLORABLE
    else:
        status = NOT_COLORABLE if exhausted else RESOURCE_LIMIT
    print(status)
    if args.all:
        print(f"colorings found: {len(found)}{'' if exhausted or len(found) >= args.all else ' (search incomplete)'}")
    print(_stats_text(stats, not args.no_timing))
    if found and args.cert:
        text = formats.write_certificate(
            found[0], g_des, h_des, comments=[f"H-coloring of {args.graph} by {args.pattern}"]
        )
        with open(args.cert, "w") as fh:
            fh.write(text)
        print(f"certificate written to {args.cert}")
    return _STATUS_EXIT[status]


def cmd_verify(args) -> int:
    try:
        with open(args.cert) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc.strerror}") from None
    graphs = None
    if args.graph or args.pattern:
        if not (args.graph and args.pattern):
            raise UsageError("--graph and --pattern must be given together")
        graphs = (load_graph(args.graph)[0], load_graph(args.pattern)[0])
    try:
        formats.read_certificate(text, graphs=graphs)
    except formats.UnknownGraphDesignator as exc:
        raise UsageError(str(exc)) from None
    except (GraphError, ValueError) as exc:
        print(f"INVALID: {type(exc).__name__}: {exc}")
        return EXIT_NO
    print("VALID")
    return EXIT_OK


def _batch_row(line: str, h_edges, h_n, node_limit, timeout) -> tuple[str, str, str, float]:
    t0 = time.perf_counter()
    try:
        g = formats.parse_graph(line)
    except (GraphError, KeyError) as exc:
        return line, "ERROR", f"{type(exc).__name__}", time.perf_counter() - t0
    out = solve(g, build(h_n, h_edges), SolveOptions(node_limit=node_limit, time_limit=timeout))
    return line, out.status, str(out.stats.nodes), out.stats.wall_time


def cmd_batch(args) -> int:
    h, _ = load_graph(args.pattern)
    try:
        with open(args.graphs) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("c ")]
    except OSError as exc:
        raise UsageError(f"cannot read {args.graphs}: {exc.strerror}") from None
    workers = args.workers or int(os.environ.get("HCOLOR_WORKERS", "1"))
    job = (h.edges, h.n, args.node_limit, args.timeout)
    if workers > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_batch_row, lines, *[[x] * len(lines) for x in job]))
    else:
        rows = [_batch_row(ln, *job) for ln in lines]
    out = ["graph\tverdict\tnodes\tms"]
    for enc, verdict, nodes, secs in rows:
        ms = f"{secs * 1000:.0f}" if not args.no_timing else "-"
        out.append(f"{enc}\t{verdict}\t{nodes}\t{ms}")
    text = "\n".join(out) + "\n"
    if args.report == "-":
        sys.stdout.write(text)
    else:
        with open(args.report, "w") as fh:
            fh.write(text)
    return EXIT_OK


def certify(g: MultiGraph, opts: SolveOptions) -> list[dict]:
    """Six checks showing ``g`` is a cubic graph with a perfect matching that neither S10 nor S12 colors."""
    s10 = catalog.named("S10").graph
    s12 = catalog.named("S12").graph
    rows = []

    def add(name, status, detail, stats=None):
        row = {"check": name, "status": status, "detail": detail}
        if stats is not None:
            row["nodes"] = stats.nodes
            row["max_depth"] = stats.max_depth
            row["seconds"] = round(stats.wall_time, 3)
        rows.append(row)

    cubic = is_k_regular(g, 3)
    connected = len(connected_components(g)) == 1
    ok = cubic and connected and (g.n, g.m) == (24, 36)
    add("cubic_connected", "PASS" if ok else "FAIL",
        f"n={g.n} m={g.m} cubic={cubic} connected={connected}")
    pm = find_perfect_matching(g)
    add("perfect_matching", "PASS" if pm is not None else "FAIL",
        f"matching edges={sorted(pm)}" if pm is not None else "none")
    nb = len(bridges(g))
    add("three_bridges", "PASS" if nb == 3 else "FAIL", f"bridges={nb}")

    def verdict(name, G, H, want):
        out = solve(G, H, opts)
        if out.status == RESOURCE_LIMIT:
            status = RESOURCE_LIMIT
        elif out.status == want:
            status = "PASS"
            if out.certificate is not None:
                status = "PASS" if verify(G, H, out.certificate).ok else "FAIL"
        else:
            status = "FAIL"
        add(name, status, out.status, out.stats)

    verdict("gstar_not_s10_colorable", g, s10, NOT_COLORABLE)
    verdict("s12_s10_colorable", s12, s10, COLORABLE)
    verdict("gstar_not_s12_colorable", g, s12, NOT_COLORABLE)
    return rows


def cmd_certify(args) -> int:
    g = catalog.build_g_star().graph if args.graph is None else load_graph(args.graph)[0]
    rows = certify(g, _options(args))
    for r in rows:
        extra = f"\tnodes={r['nodes']}" if "nodes" in r else ""
        if "seconds" in r and not args.no_timing:
            extra += f"\tseconds={r['seconds']}"
        print(f"{r['check']}\t{r['status']}\t{r['detail']}{extra}")
    statuses = [r["status"] for r in rows]
    code = EXIT_NO if "FAIL" in statuses else EXIT_LIMIT if RESOURCE_LIMIT in statuses else EXIT_OK
    summary = {
        "result": {EXIT_OK: "PASS", EXIT_NO: "FAIL", EXIT_LIMIT: RESOURCE_LIMIT}[code],
        "checks": [
            {k: v for k, v in r.items() if k != "seconds" or not args.no_timing} for r in rows
        ],
    }
    print(json.dumps(summary, sort_keys=True))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return code


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hcolor", description="H-coloring solver and verifier")
    sub = p.add_subparsers(dest="command", required=True)

    def limits(sp):
        sp.add_argument("--node-limit", type=int, default=None)
        sp.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="seconds")
        sp.add_argument("--no-timing", action="store_true", help="omit wall-clock figures")

    sp = sub.add_parser("show", help="print a graph encoding")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--format", choices=("sparse6", "graph6", "edgelist"), default="sparse6")
    sp.set_defaults(func=cmd_show)

    sp = sub.add_parser("invariants", help="structural invariants of a graph")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("solve", help="decide whether PATTERN colors GRAPH")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--all", type=int, default=None, metavar="N", help="collect up to N colorings")
    sp.add_argument("--cert", default=None, metavar="PATH")
    sp.add_argument("--heuristic", choices=("most_constrained", "bfs"), default="most_constrained")
    limits(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a certificate file")
    sp.add_argument("--graph", default=None)
    sp.add_argument("--pattern", default=None)
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("batch", help="solve one pattern against many graphs")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--graphs", required=True, metavar="FILE")
    sp.add_argument("--report", default="-", metavar="FILE")
    sp.add_argument("--workers", type=int, default=None)
    limits(sp)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("certify-counterexample", help="run the full G* certification")
    sp.add_argument("--graph", default=None, help="override G* (for experiments)")
    sp.add_argument("--json", default=None, metavar="PATH")
    limits(sp)
    sp.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
