"""Cycle and path counts computed only from pair-local path statistics.

Everything here is arithmetic over :class:`PairProfile`: adjacency, common
neighbor counts, simple 3-path counts and simple 4-path counts per ordered
vertex pair. No function in this module enumerates paths or cycles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from wlgraph.errors import ConsistencyError, PreconditionError
from wlgraph.graph import Graph

Matrix = list[list[int]]


@dataclass(frozen=True)
class PairProfile:
    """``pL[u][v]`` is the number of simple paths with L edges from u to v.

    Diagonal entries are 0.
    """

    n: int
    degree: list[int]
    p1: Matrix
    p2: Matrix
    p3: Matrix
    p4: Matrix


def _p1_p2(g: Graph) -> tuple[Matrix, Matrix]:
    n = g.n
    p1 = [[int(g.has_edge(u, v)) for v in range(n)] for u in range(n)]
    p2 = [
        [len(g.neighbors(u) & g.neighbors(v)) if u != v else 0 for v in range(n)]
        for u in range(n)
    ]
    return p1, p2


def _p3(g: Graph) -> Matrix:
    n = g.n
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            total = 0
            for x in g.neighbors(u):
                if x == v:
                    continue
                # y ranges over N(x) & N(v) minus u and x itself (x is not in N(x))
                common = g.neighbors(x) & g.neighbors(v)
                total += len(common) - (u in common)
            out[u][v] = total
    return out


def path_histogram(g: Graph, u: int, v: int, p1: Matrix, p2: Matrix) -> Counter:
    """Count w outside {u, v} by (p1[u][w], p2[u][w], p1[w][v], p2[w][v])."""
    return Counter(
        (p1[u][w], p2[u][w], p1[w][v], p2[w][v]) for w in range(g.n) if w != u and w != v
    )


def _path4(g: Graph, u: int, v: int, p1: Matrix, p2: Matrix, degree: list[int]) -> int:
    a = p1[u][v]
    total = sum(
        cnt * (l2 - a * m1) * (m2 - a * l1)
        for (l1, l2, m1, m2), cnt in path_histogram(g, u, v, p1, p2).items()
    )
    # walks u, x, w, x, v
    total -= sum((degree[x] - 2) for x in g.neighbors(u) & g.neighbors(v))
    return total


def pair_path4(g: Graph, u: int, v: int) -> int:
    """Number of simple 4-edge paths from ``u`` to ``v``."""
    if u == v:
        raise PreconditionError("pair_path4 needs distinct endpoints")
    p1, p2 = _p1_p2(g)
    return _path4(g, u, v, p1, p2, g.degrees())


def pair_profile(g: Graph) -> PairProfile:
    n = g.n
    degree = g.degrees()
    p1, p2 = _p1_p2(g)
    p4 = [
        [_path4(g, u, v, p1, p2, degree) if u != v else 0 for v in range(n)] for u in range(n)
    ]
    return PairProfile(n, degree, p1, p2, _p3(g), p4)


def _exact_div(total: int, d: int, what: str) -> int:
    q, r = divmod(total, d)
    if r:
        raise ConsistencyError(f"{what}: sum {total} is not divisible by {d}")
    return q


def formula_triangles(g: Graph, profile: PairProfile | None = None) -> int:
    """A third of the sum over edges of their triangle counts, binned by count."""
    pp = profile or pair_profile(g)
    edges_in = Counter(pp.p2[u][v] for u, v in g.edges)
    return _exact_div(sum(j * c for j, c in edges_in.items()), 3, "triangles")


def formula_4cycles(g: Graph, profile: PairProfile | None = None) -> int:
    """Each quadrangle has two diagonals, adjacent or not."""
    pp = profile or pair_profile(g)
    total = sum(comb(pp.p2[u][v], 2) for u in range(pp.n) for v in range(u + 1, pp.n))
    return _exact_div(total, 2, "4-cycles")


def formula_5cycles(g: Graph, profile: PairProfile | None = None) -> int:
    """Every 5-cycle is an edge closed by a 4-path, seen from 10 ordered edges."""
    pp = profile or pair_profile(g)
    total = sum(pp.p4[u][v] + pp.p4[v][u] for u, v in g.edges)
    return _exact_div(total, 10, "5-cycles")


def _six_for_pair(pp: PairProfile, a: int, b: int) -> int:
    """Labelled 6-cycles a, v1, v2, v3, b, v5, up to a chord correction.

    Counts 4-paths a..b times 2-paths a..b, then removes the cases where the
    middle of the 2-path reappears on the 4-path at position 1, 2 or 3. The
    position-2 term also removes squares with v1 == v3, which are not
    4-paths at all; :func:`formula_6cycles` adds those back in aggregate.
    """
    p1, p2, p3, p4 = pp.p1, pp.p2, pp.p3, pp.p4
    ab = p1[a][b]
    common = p2[a][b]
    others = [x for x in range(pp.n) if x != a and x != b]

    pairs = p2[a][b] * p4[a][b]

    def shared_neighbor(s: int, t: int) -> int:
        # middle of the 2-path is the first interior vertex after s
        star = sum(p1[s][x] * p1[x][t] * p3[x][t] for x in others)
        via_s_square = common * (common - 1)
        via_s_triangle = ab * sum(p1[s][x] * p1[x][t] * (p2[s][x] - 1) for x in others)
        return star - via_s_square - via_s_triangle

    at_middle = sum(
        p1[a][x] * p1[x][b] * (p2[a][x] - ab) * (p2[x][b] - ab) for x in others
    )
    return pairs - shared_neighbor(a, b) - shared_neighbor(b, a) - at_middle


def formula_6cycles(g: Graph, profile: PairProfile | None = None) -> int:
    pp = profile or pair_profile(g)
    total = sum(_six_for_pair(pp, a, b) for a in range(pp.n) for b in range(pp.n) if a != b)
    # 4-vertex configurations a, x, b, y around a chord x-y were removed once
    # too often; they are counted per chord instead of per (a, b)
    total += sum(
        pp.p2[u][v] * (pp.p2[u][v] - 1) for u in range(pp.n) for v in range(pp.n) if pp.p1[u][v]
    )
    return _exact_div(total, 12, "6-cycles")


FORMULAS = {
    3: formula_triangles,
    4: formula_4cycles,
    5: formula_5cycles,
    6: formula_6cycles,
}


def formula_census(g: Graph, max_length: int) -> dict[int, int]:
    """Cycle counts for lengths 3..max_length, which must not exceed 6."""
    if max_length > 6 or max_length < 3:
        raise PreconditionError(
            f"formula counting supports cycle lengths {sorted(FORMULAS)}, got up to {max_length}"
        )
    pp = pair_profile(g)
    return {L: FORMULAS[L](g, pp) for L in range(3, max_length + 1)}
