"""Undirected simple graphs on vertices 0..n-1, text I/O and small generators."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from wlgraph.errors import (
    DuplicateEdgeError,
    GraphFormatError,
    HeaderError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


class Graph:
    """Immutable undirected simple graph.

    Vertices are the integers ``0..n-1``. Edges are stored normalized as
    ``(u, v)`` with ``u < v``.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        normalized = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise ValueError(f"duplicate edge {key}")
            normalized.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(normalized)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + off, v + off) for u, v in h.edges])


# --- text format -----------------------------------------------------------


def load_graph(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Lines starting with ``#`` and blank lines are skipped. Errors name the
    1-based line number of the offending line.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise HeaderError("missing header line 'n m'", None)

    lineno, header = rows[0]
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
        if n < 0 or m < 0:
            raise ValueError
    except ValueError:
        raise HeaderError(f"malformed header {' '.join(header)!r}, expected 'n m'", lineno) from None

    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else lineno
        raise HeaderError(f"header declares {m} edges but {len(body)} edge lines follow", where)

    seen: set[Edge] = set()
    for lineno, parts in body:
        try:
            if len(parts) != 2:
                raise ValueError
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {' '.join(parts)!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex id out of range 0..{n - 1} in edge {u} {v}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
    return Graph(n, seen)


def dump_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


# --- generators ------------------------------------------------------------


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cube_graph() -> Graph:
    return Graph(8, [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# --- tuple isomorphism types ----------------------------------------------


class TupleType(NamedTuple):
    """Isomorphism type of an ordered vertex tuple.

    ``equality`` gives, per position, the index of its block in
    first-occurrence order; ``adjacency`` lists position pairs ``(i, j)``,
    ``i < j``, whose vertices are adjacent.
    """

    equality: tuple[int, ...]
    adjacency: tuple[tuple[int, int], ...]


def tuple_type(g: Graph, t: Sequence[int]) -> TupleType:
    blocks: dict[int, int] = {}
    equality = tuple(blocks.setdefault(v, len(blocks)) for v in t)
    adjacency = tuple(
        (i, j) for i, j in combinations(range(len(t)), 2) if g.has_edge(t[i], t[j])
    )
    return TupleType(equality, adjacency)
