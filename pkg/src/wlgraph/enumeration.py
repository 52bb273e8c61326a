"""Exhaustive counting of paths, cycles and cliques."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from wlgraph.errors import PreconditionError
from wlgraph.graph import Graph


def count_paths_between(g: Graph, u: int, v: int, length: int) -> int:
    """Number of simple paths with ``length`` edges from ``u`` to ``v`` (DFS)."""
    if u == v:
        raise PreconditionError("path endpoints must be distinct")
    if length < 1:
        return 0
    on_path = {u}

    def walk(x: int, remaining: int) -> int:
        if remaining == 1:
            return int(g.has_edge(x, v))
        total = 0
        for y in g.neighbors(x):
            if y != v and y not in on_path:
                on_path.add(y)
                total += walk(y, remaining - 1)
                on_path.discard(y)
        return total

    return walk(u, length)


def iter_cycles(g: Graph, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle (length >= 3) exactly once as a vertex tuple.

    A cycle is reported starting at its smallest vertex, in the direction
    whose second vertex is smaller than its last one.
    """
    limit = g.n if max_length is None else max_length
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(x: int) -> Iterator[tuple[int, ...]]:
            for y in sorted(g.neighbors(x)):
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif y > s and y not in on_path and len(path) < limit:
                    path.append(y)
                    on_path.add(y)
                    yield from extend(y)
                    path.pop()
                    on_path.discard(y)

        yield from extend(s)


@dataclass
class CycleCensus:
    """Cycle totals per length ``1..max_length``.

    ``totals[1]`` is 0 and ``totals[2]`` is the edge count, matching the usual
    table layout; entries from 3 on are genuine simple-cycle counts.
    ``per_vertex[L][v]`` is the number of ``L``-cycles through ``v``.
    """

    n: int
    max_length: int
    totals: dict[int, int]
    per_vertex: dict[int, list[int]] = field(default_factory=dict)

    def __getitem__(self, length: int) -> int:
        return self.totals[length]

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.totals.items())


def _cycles_by_vertex_set(g: Graph, max_length: int) -> dict[int, int]:
    """Map bitmask of a vertex set to the number of simple cycles spanning it.

    For each root ``s`` this extends simple paths from ``s`` through vertices
    larger than ``s`` keyed by (visited set, endpoint); closing back to ``s``
    from a path of 3+ vertices finds each cycle once per direction.
    """
    nbr = [sorted(g.neighbors(v)) for v in range(g.n)]
    twice: dict[int, int] = defaultdict(int)
    for s in range(g.n):
        layer: dict[tuple[int, int], int] = {(1 << s, s): 1}
        for size in range(1, max_length):
            nxt: dict[tuple[int, int], int] = defaultdict(int)
            for (mask, x), cnt in layer.items():
                for y in nbr[x]:
                    if y > s and not mask >> y & 1:
                        nxt[(mask | 1 << y, y)] += cnt
            layer = nxt
            if size + 1 >= 3:
                for (mask, x), cnt in layer.items():
                    if g.has_edge(x, s):
                        twice[mask] += cnt
            if not layer:
                break
    return {mask: c // 2 for mask, c in twice.items()}


def count_cycles_brute(
    g: Graph, max_length: int | None = None, *, per_vertex: bool = False
) -> CycleCensus:
    limit = g.n if max_length is None else max_length
    if limit < 1:
        raise PreconditionError("max_length must be at least 1")
    totals = {L: 0 for L in range(1, limit + 1)}
    if limit >= 2:
        totals[2] = g.m
    by_set = _cycles_by_vertex_set(g, limit) if limit >= 3 else {}
    pv: dict[int, list[int]] = {}
    if per_vertex:
        pv = {L: [0] * g.n for L in range(3, limit + 1)}
    for mask, cnt in by_set.items():
        L = mask.bit_count()
        totals[L] += cnt
        if per_vertex:
            row = pv[L]
            for v in range(g.n):
                if mask >> v & 1:
                    row[v] += cnt
    return CycleCensus(g.n, limit, totals, pv)


def per_vertex_cycles(g: Graph, length: int) -> dict[int, int]:
    """Map each vertex to the number of ``length``-cycles through it."""
    if length < 3:
        raise PreconditionError("cycles have length at least 3")
    census = count_cycles_brute(g, length, per_vertex=True)
    return dict(enumerate(census.per_vertex[length]))


def count_cliques(g: Graph, k: int) -> int:
    """Number of k-vertex subsets inducing a complete graph."""
    if k < 1:
        raise PreconditionError("clique size must be positive")
    later = [frozenset(w for w in g.neighbors(v) if w > v) for v in range(g.n)]

    def extend(candidates: frozenset[int], need: int) -> int:
        if need == 0:
            return 1
        if len(candidates) < need:
            return 0
        return sum(extend(candidates & later[v], need - 1) for v in candidates)

    return extend(frozenset(range(g.n)), k)
