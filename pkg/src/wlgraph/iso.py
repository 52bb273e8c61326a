"""Small-scale isomorphism test: WL[1] pruning plus individualization backtracking."""

from __future__ import annotations

from wlgraph.errors import SizeLimitError
from wlgraph.graph import Graph
from wlgraph.wl import refine_together

MAX_VERTICES = 64


def _is_isomorphism(g1: Graph, g2: Graph, mapping: list[int]) -> bool:
    if sorted(mapping) != list(range(g2.n)):
        return False
    return {tuple(sorted((mapping[u], mapping[v]))) for u, v in g1.edges} == g2.edges


def _search(g1: Graph, g2: Graph, ind1: list[int], ind2: list[int]) -> list[int] | None:
    c1, c2 = refine_together([g1, g2], 1, [ind1, ind2])
    if c1.histogram() != c2.histogram():
        return None
    col1 = [c1.color_of[(v,)] for v in range(g1.n)]
    col2 = [c2.color_of[(v,)] for v in range(g2.n)]
    sizes = c1.histogram()
    target = next((c for c, size in sizes.items() if size > 1), None)
    if target is None:
        where = {c: v for v, c in enumerate(col2)}
        mapping = [where[c] for c in col1]
        return mapping if _is_isomorphism(g1, g2, mapping) else None
    u = col1.index(target)
    for v in (w for w in range(g2.n) if col2[w] == target):
        found = _search(g1, g2, ind1 + [u], ind2 + [v])
        if found is not None:
            return found
    return None


def is_isomorphic(g1: Graph, g2: Graph, *, max_vertices: int = MAX_VERTICES) -> list[int] | None:
    """Return ``mapping`` with ``mapping[u]`` the image of ``u``, or None.

    Any returned mapping has been checked edge by edge.
    """
    if max(g1.n, g2.n) > max_vertices:
        raise SizeLimitError(
            f"isomorphism test is limited to {max_vertices} vertices, got {max(g1.n, g2.n)}"
        )
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if g1.n == 0:
        return []
    return _search(g1, g2, [], [])
