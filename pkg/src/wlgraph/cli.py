"""Command-line front end.

Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
2 usage error, 3 malformed graph file, 4 precondition violation,
5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from wlgraph.cfi import build_cfi, dump_cfi, k4_global, load_global
from wlgraph.enumeration import count_cliques, count_cycles_brute
from wlgraph.errors import ConsistencyError, GraphFormatError, PreconditionError
from wlgraph.formulas import formula_census
from wlgraph.graph import Graph, read_graph
from wlgraph.iso import is_isomorphic
from wlgraph.wl import DEFAULT_MEMORY_BUDGET, coloring_report, refine_together

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_CONSISTENCY = 5


def _edge_list(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            u, v = item.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad edge {item!r}, expected 'u-v'") from None
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_cfi_gen(args) -> None:
    h = k4_global() if args.global_ == "k4" else load_global(_read_text(args.global_))
    flips = list(args.flips)
    if args.random_flips:
        edges = h.graph.sorted_edges()
        if args.random_flips > len(edges):
            raise PreconditionError(f"cannot pick {args.random_flips} of {len(edges)} edges")
        flips += random.Random(args.seed).sample(edges, args.random_flips)
    _emit(dump_cfi(build_cfi(h, flips)), args.out)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _refine(graphs: list[Graph], args, inds=None):
    return refine_together(graphs, args.k, inds, memory_budget=args.memory_budget)


def cmd_refine(args) -> None:
    g = read_graph(args.graph)
    (c,) = _refine([g], args, [args.individualize])
    _emit(json.dumps(coloring_report(c), indent=1) + "\n", args.out)


def cmd_compare(args) -> None:
    a, b = read_graph(args.a), read_graph(args.b)
    ca, cb = _refine([a, b], args)
    ha, hb = ca.histogram(), cb.histogram()
    verdict = "equal" if ha == hb else "different"
    report = {"dimension": args.k, "a": {str(k): v for k, v in ha.items()},
              "b": {str(k): v for k, v in hb.items()}}
    _emit(verdict + "\n" + json.dumps(report, indent=1) + "\n", args.out)


def cmd_count(args) -> None:
    g = read_graph(args.graph)
    if args.what == "cliques":
        if args.k is None:
            raise PreconditionError("--k (clique size) is required with --what cliques")
        _emit(f"k\tcount\n{args.k}\t{count_cliques(g, args.k)}\n", args.out)
        return
    limit = args.max_length if args.max_length is not None else g.n
    if args.method == "formula":
        counts = formula_census(g, limit)
        rows = [f"{L}\t{c}\tformula" for L, c in counts.items()]
        _emit("length\tcount\tmethod\n" + "\n".join(rows) + "\n", args.out)
    else:
        census = count_cycles_brute(g, limit)
        rows = [f"{L}\t{c}" for L, c in census.rows()]
        _emit("length\tcount\n" + "\n".join(rows) + "\n", args.out)


def table1() -> str:
    h = k4_global()
    plain = count_cycles_brute(build_cfi(h).product)
    twisted = count_cycles_brute(build_cfi(h, [(1, 3)]).product)
    rows = ["n\tnot_twisted\ttwisted"]
    rows += [f"{L}\t{plain[L]}\t{twisted[L]}" for L in range(1, 17)]
    return "\n".join(rows) + "\n"


def cmd_repro_table1(args) -> None:
    _emit(table1(), args.out)


def cmd_iso(args) -> None:
    a, b = read_graph(args.a), read_graph(args.b)
    mapping = is_isomorphic(a, b)
    if mapping is None:
        _emit("non-isomorphic\n", args.out)
    else:
        _emit("isomorphic\n" + "".join(f"{u} -> {v}\n" for u, v in enumerate(mapping)), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlgraph", description="Weisfeiler-Lehman refinement, CFI graphs and cycle counts."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k_default=None, k_choices=(1, 2, 3)):
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--memory-budget", type=int, default=DEFAULT_MEMORY_BUDGET,
                       help="maximum n^k tuples for WL[k]")
        if k_choices:
            p.add_argument("--k", type=int, default=k_default, choices=k_choices)

    p = sub.add_parser("cfi-gen", help="build a CFI graph")
    p.add_argument("--global", dest="global_", default="k4",
                   help="3-regular global graph file, or 'k4' (default)")
    p.add_argument("--flips", type=_edge_list, default=[], help="comma-separated u-v edges")
    p.add_argument("--random-flips", type=int, default=0, metavar="N",
                   help="additionally flip N distinct edges chosen with --seed")
    common(p, k_choices=())
    p.set_defaults(func=cmd_cfi_gen)

    p = sub.add_parser("refine", help="run WL[k] and print the coloring report")
    p.add_argument("graph")
    p.add_argument("--individualize", type=_int_list, default=[])
    common(p, k_default=2)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("compare", help="compare WL[k] invariants of two graphs")
    p.add_argument("a")
    p.add_argument("b")
    common(p, k_default=2)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("count", help="count cycles or cliques")
    p.add_argument("graph")
    p.add_argument("--what", choices=("cycles", "cliques"), default="cycles")
    p.add_argument("--max-length", type=int)
    p.add_argument("--method", choices=("brute", "formula"), default="brute")
    common(p, k_choices=())
    p.add_argument("--k", type=int, help="clique size")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("iso", help="decide isomorphism of two small graphs")
    p.add_argument("a")
    p.add_argument("b")
    common(p, k_choices=())
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("repro-table1", help="cycle counts of the CFI(K4) pair")
    common(p, k_choices=())
    p.set_defaults(func=cmd_repro_table1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    return 0


if __name__ == "__main__":
    sys.exit(main())
