"""CFI graphs over 3-regular global graphs.

Each global vertex ``v`` becomes a gadget of four corners ``v0..v3``
(counterclockwise around a square, ``v0`` bottom left) with product ids
``4*v + j``. Each ordered global edge carries a label naming one of the
three ways to split the corners into two pairs:

    a: Bottom {0, 1} / Top {2, 3}
    b: Left {0, 3} / Right {1, 2}
    c: Slash {0, 2} / Backslash {1, 3}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from wlgraph.errors import GraphFormatError, PreconditionError
from wlgraph.graph import Graph, complete_graph, dump_graph, load_graph

Label = Literal["a", "b", "c"]
ExchangeKind = Literal["BottomTop", "LeftRight"]

PAIRS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "a": ((0, 1), (2, 3)),
    "b": ((0, 3), (1, 2)),
    "c": ((0, 2), (1, 3)),
}

# Reflections of the square: BottomTop mirrors across the horizontal axis
# (0<->3, 1<->2), LeftRight across the vertical axis (0<->1, 2<->3).
EXCHANGES: dict[str, tuple[int, int, int, int]] = {
    "BottomTop": (3, 2, 1, 0),
    "LeftRight": (1, 0, 3, 2),
}


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GlobalGraph:
    graph: Graph
    labels: dict[tuple[int, int], str]

    def __post_init__(self):
        g = self.graph
        for v in range(g.n):
            if g.degree(v) != 3:
                raise PreconditionError(
                    f"global graph must be 3-regular; vertex {v} has degree {g.degree(v)}"
                )
            out = sorted(self.labels.get((v, w), "?") for w in g.neighbors(v))
            if out != ["a", "b", "c"]:
                raise PreconditionError(
                    f"outgoing edges of vertex {v} must carry labels a, b, c; got {out}"
                )
        extra = set(self.labels) - {(u, v) for u, v in g.edges} - {(v, u) for u, v in g.edges}
        if extra:
            raise PreconditionError(f"labels given for non-edges {sorted(extra)}")

    @classmethod
    def with_default_labels(cls, g: Graph) -> GlobalGraph:
        """Label the outgoing edges of each vertex a, b, c by increasing neighbor."""
        labels = {}
        for v in range(g.n):
            for lab, w in zip("abc", sorted(g.neighbors(v))):
                labels[(v, w)] = lab
        return cls(g, labels)


def k4_global() -> GlobalGraph:
    """K4 with a on (i, i+1 mod 4), c on (i+1 mod 4, i) and b on both diagonals."""
    labels = {}
    for i in range(4):
        labels[(i, (i + 1) % 4)] = "a"
        labels[((i + 1) % 4, i)] = "c"
    for u, v in ((0, 2), (1, 3)):
        labels[(u, v)] = labels[(v, u)] = "b"
    return GlobalGraph(complete_graph(4), labels)


@dataclass(frozen=True)
class CfiGraph:
    product: Graph
    base: GlobalGraph
    flips: frozenset[tuple[int, int]]

    @staticmethod
    def vertex(v: int, corner: int) -> int:
        return 4 * v + corner

    @staticmethod
    def corner(x: int) -> tuple[int, int]:
        return divmod(x, 4)


def _normalize_flips(h: GlobalGraph, flips: Iterable[Sequence[int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for e in flips:
        u, v = e
        key = _edge_key(u, v)
        if key not in h.graph.edges:
            raise PreconditionError(f"flip edge {u}-{v} is not an edge of the global graph")
        out.add(key)
    return frozenset(out)


def build_cfi(h: GlobalGraph, flips: Iterable[Sequence[int]] = ()) -> CfiGraph:
    flipped = _normalize_flips(h, flips)
    edges = []
    for u, v in h.graph.sorted_edges():
        p1, p2 = PAIRS[h.labels[(u, v)]]
        q1, q2 = PAIRS[h.labels[(v, u)]]
        if (u, v) in flipped:
            q1, q2 = q2, q1
        for ps, qs in ((p1, q1), (p2, q2)):
            edges.extend((4 * u + i, 4 * v + j) for i in ps for j in qs)
    return CfiGraph(Graph(4 * h.graph.n, edges), h, flipped)


def gadget_exchange(g: CfiGraph, v: int, kind: ExchangeKind) -> list[int]:
    """Permutation of product vertices reflecting the corners of gadget ``v``."""
    if not 0 <= v < g.base.graph.n:
        raise PreconditionError(f"{v} is not a global vertex")
    sigma = EXCHANGES[kind]
    perm = list(range(g.product.n))
    for j in range(4):
        perm[4 * v + j] = 4 * v + sigma[j]
    return perm


def exchange_moved_flips(h: GlobalGraph, v: int, kind: ExchangeKind) -> frozenset[tuple[int, int]]:
    """Incident edges of ``v`` whose matching the exchange reverses."""
    sigma = EXCHANGES[kind]
    moved = set()
    for w in h.graph.neighbors(v):
        first = PAIRS[h.labels[(v, w)]][0]
        if {sigma[first[0]], sigma[first[1]]} != set(first):
            moved.add(_edge_key(v, w))
    return frozenset(moved)


# --- file format ---------------------------------------------------------------


def dump_cfi(g: CfiGraph) -> str:
    """Standard graph file followed by ``# cfi ...`` annotation lines."""
    h = g.base
    lines = [dump_graph(g.product).rstrip("\n")]
    lines.append(f"# cfi global {h.graph.n} {h.graph.m}")
    for u, v in h.graph.sorted_edges():
        lines.append(f"# cfi edge {u} {v} {h.labels[(u, v)]} {h.labels[(v, u)]}")
    for u, v in sorted(g.flips):
        lines.append(f"# cfi flip {u} {v}")
    for v in range(h.graph.n):
        ids = " ".join(str(4 * v + j) for j in range(4))
        lines.append(f"# cfi gadget {v} {ids}")
    return "\n".join(lines) + "\n"


def load_cfi(text: str) -> CfiGraph:
    product = load_graph(text)
    header = None
    edges, labels, flips = [], {}, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts[:2] != ["#", "cfi"]:
            continue
        try:
            tag, args = parts[2], parts[3:]
            if tag == "global":
                header = (int(args[0]), int(args[1]))
            elif tag == "edge":
                u, v = int(args[0]), int(args[1])
                edges.append((u, v))
                labels[(u, v)], labels[(v, u)] = args[2], args[3]
            elif tag == "flip":
                flips.append((int(args[0]), int(args[1])))
            elif tag == "gadget":
                v = int(args[0])
                if [int(x) for x in args[1:5]] != [4 * v + j for j in range(4)]:
                    raise GraphFormatError(f"gadget {v} does not use ids 4v..4v+3", lineno)
            else:
                raise GraphFormatError(f"unknown cfi annotation {tag!r}", lineno)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"malformed cfi annotation {raw.strip()!r}", lineno) from None
    if header is None:
        raise GraphFormatError("missing '# cfi global' annotation", None)
    h = GlobalGraph(Graph(header[0], edges), labels)
    built = build_cfi(h, flips)
    if built.product != product:
        raise GraphFormatError("edge list disagrees with the cfi annotations", None)
    return built


def load_global(text: str) -> GlobalGraph:
    """Global graph from the edge-list format.

    Optional ``# label u v X`` lines fix the label of ordered edge (u, v);
    without any, labels are assigned by :meth:`GlobalGraph.with_default_labels`.
    """
    g = load_graph(text)
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts[:2] != ["#", "label"]:
            continue
        if len(parts) != 5 or parts[4] not in PAIRS:
            raise GraphFormatError(f"malformed label annotation {raw.strip()!r}", lineno)
        try:
            labels[(int(parts[2]), int(parts[3]))] = parts[4]
        except ValueError:
            raise GraphFormatError(f"malformed label annotation {raw.strip()!r}", lineno) from None
    if not labels:
        return GlobalGraph.with_default_labels(g)
    return GlobalGraph(g, labels)
