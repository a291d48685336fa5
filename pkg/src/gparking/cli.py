"""Command-line front end.

    gparking --graph G.json parking enumerate
    gparking --graph G.json parking check -1,0,0,2
    gparking --graph G.json tree from-parking -1,0,0,2
    gparking --graph G.json parking from-tree '[[1,0,0],[2,1,0],[3,2,0]]'
    gparking --graph G.json bridges -1,0,0,2
    gparking --graph G.json tutte --method delcon
    gparking --graph G.json bw
    gparking classical cm 0,2,1
    gparking classical tutte 3

Exit status: 0 on success, 1 when the input is well formed but fails a domain
condition (not parking, disconnected graph, tree not in the graph), 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import classical
from .bijection import ColoredSpanningTree, algorithm_a, check_ranking, theta_parking
from .criticality import ParkingTable
from .errors import GraphError, NotParkingError, RankingError, RootValueError
from .graph import Multigraph, load_json
from .parking import check_parking, enumerate_parking, weight_w
from .tutte import bw_multiset, tutte_delcon, tutte_from_bw, tutte_parking


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1,0,2" through as a positional value
        self._negative_number_matcher = re.compile(r"^-\d[\d,]*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _common_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("-g", "--graph", default=dflt(None),
                        help='graph JSON file: {"vertices": k, "edges": [[u, v], ...]}')
    parser.add_argument("-r", "--ranking", default=dflt(None),
                        help="vertex ranking tau(1),...,tau(n); identity by default")
    parser.add_argument("-f", "--format", choices=("text", "json"), default=dflt("text"))
    parser.add_argument("-j", "--jobs", type=int, default=dflt(None),
                        help="worker processes for bridge statistics (default: $GPARKING_JOBS or 1)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gparking", description="G-parking functions, spanning trees and Tutte polynomials.")
    _common_options(p, suppress=False)
    # leaf commands accept the same options after the command words
    leaf = _Parser(add_help=False)
    _common_options(leaf, suppress=True)
    kw = {"parents": [leaf]}

    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    park = sub.add_parser("parking").add_subparsers(dest="action", required=True, parser_class=_Parser)
    park.add_parser("enumerate", **kw)
    park.add_parser("check", **kw).add_argument("f")
    park.add_parser("from-tree", **kw).add_argument(
        "tree", help="JSON [[vertex, parent, color], ...] or a file holding it")

    tree = sub.add_parser("tree").add_subparsers(dest="action", required=True, parser_class=_Parser)
    tree.add_parser("from-parking", **kw).add_argument("f")

    sub.add_parser("bridges", **kw).add_argument("f")
    tutte = sub.add_parser("tutte", **kw)
    tutte.add_argument("-m", "--method", choices=("parking", "delcon"), default="parking")
    sub.add_parser("bw", **kw)

    cl = sub.add_parser("classical").add_subparsers(dest="action", required=True, parser_class=_Parser)
    cl.add_parser("cm", **kw).add_argument("alpha")
    cl.add_parser("tutte", **kw).add_argument("n", type=int)
    return p


def _load_graph(args) -> Multigraph:
    if not args.graph:
        raise UsageError("this command needs --graph")
    try:
        with open(args.graph) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    try:
        return load_json(text)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _ranking(args, G: Multigraph) -> tuple[int, ...]:
    try:
        return check_ranking(parse_ints(args.ranking) if args.ranking else None, G.n)
    except RankingError as exc:
        raise UsageError(str(exc)) from None


def _parse_tree(text: str, G: Multigraph) -> ColoredSpanningTree:
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        triples = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed tree JSON: {exc}") from None
    if not isinstance(triples, list) or not all(isinstance(t, list) and len(t) == 3 for t in triples):
        raise UsageError("tree must be a list of [vertex, parent, color] triples")
    return ColoredSpanningTree.from_triples(triples, G.vertex_count)


def _fmt_ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload) if args.format == "json" else text)


def _dispatch(args) -> int:
    if args.command == "classical":
        if args.action == "cm":
            alpha = parse_ints(args.alpha)
            try:
                classical.embed_classical(alpha)
            except ValueError as exc:
                raise NotParkingError(str(exc)) from None
            crit = sorted(classical.critical_maxima(alpha))
            _emit(args, f"critical maxima: {_fmt_ints(crit) or '-'}\ncm={len(crit)}",
                  {"alpha": list(alpha), "critical_maxima": crit, "cm": len(crit)})
        else:
            if args.n < 1:
                raise UsageError("n must be at least 1")
            poly = classical.tutte_complete(args.n)
            print(poly.to_json() if args.format == "json" else poly)
        return 0

    G = _load_graph(args)
    tau = _ranking(args, G)
    G.require_connected()

    if args.command == "parking" and args.action == "enumerate":
        fs = enumerate_parking(G)
        _emit(args, "\n".join(_fmt_ints(f) for f in fs), [list(f) for f in fs])
    elif args.command == "parking" and args.action == "check":
        f = parse_ints(args.f)
        check_parking(G, f)
        _emit(args, "G-parking function", {"parking": True, "f": list(f)})
    elif args.command == "parking":
        T = _parse_tree(args.tree, G)
        f = theta_parking(G, tau, T)
        _emit(args, _fmt_ints(f), list(f))
    elif args.command == "tree":
        f = parse_ints(args.f)
        check_parking(G, f)
        T, order = algorithm_a(G, tau, f)
        text = "\n".join(f"{v} {p} {c}" for v, p, c in T.triples())
        text += "\norder: " + _fmt_ints(order.with_root())
        _emit(args, text, {"tree": [list(t) for t in T.triples()], "order": list(order.with_root())})
    elif args.command == "bridges":
        f = parse_ints(args.f)
        check_parking(G, f)
        table = ParkingTable(G, tau)
        crit = sorted(table.critical_vertices(f))
        bridges = sorted(table.bridge_vertices(f))
        w = weight_w(G, f)
        text = (f"order: {_fmt_ints((0,) + table.order(f))}\n"
                f"critical: {_fmt_ints(crit)}\n"
                f"bridges: {_fmt_ints(bridges) or '-'}\n"
                f"b={len(bridges)} w={w}")
        _emit(args, text, {"order": [0, *table.order(f)], "critical": crit,
                           "bridges": bridges, "b": len(bridges), "w": w})
    elif args.command == "tutte":
        poly = tutte_parking(G, tau, args.jobs) if args.method == "parking" else tutte_delcon(G)
        print(poly.to_json() if args.format == "json" else poly)
    elif args.command == "bw":
        bw = bw_multiset(G, tau, args.jobs)
        rows = sorted(bw.items())
        _emit(args, "\n".join(f"{b} {w} {c}" for (b, w), c in rows),
              {"pairs": [{"b": b, "w": w, "count": c} for (b, w), c in rows],
               "tutte": str(tutte_from_bw(bw))})
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"gparking: error: {exc}", file=sys.stderr)
        return 2
    except RootValueError as exc:
        print(f"root value must be -1 ({exc})")
        return 1
    except NotParkingError:
        print("not a G-parking function")
        return 1
    except GraphError as exc:
        print(f"gparking: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
