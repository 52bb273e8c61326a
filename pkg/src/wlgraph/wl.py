"""Weisfeiler-Lehman color refinement in dimensions 1, 2 and k.

All refinements share one engine. Every round, each tuple gets a detailed
name ``(previous color, sorted multiset)``; the names occurring in the round
are sorted and replaced by ``0, 1, 2, ...``. Several graphs can be refined
together, in which case the names are numbered over the union so that a
color id means the same thing in every graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Hashable, Literal, NamedTuple, Sequence

from wlgraph.errors import MemoryBudgetError, PreconditionError
from wlgraph.graph import Graph, tuple_type

VTuple = tuple[int, ...]
Multiset = tuple[tuple[Any, int], ...]
Definition = tuple[int, Multiset]
Partition = dict[VTuple, int]

DEFAULT_MEMORY_BUDGET = 20_000_000


@dataclass
class Coloring:
    """Stable (or capped) coloring of the k-tuples of one graph.

    ``initial`` maps each round-0 color to its tuple-type name; ``rounds[r]``
    maps each color produced by refinement round ``r + 1`` to its definition
    ``(previous color, multiset)``.
    """

    dimension: int
    n: int
    color_of: dict[VTuple, int]
    initial: dict[int, Hashable]
    rounds: list[dict[int, Definition]] = field(default_factory=list)
    stable: bool = False

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.color_of.values()).items()))

    @property
    def num_colors(self) -> int:
        return len(set(self.color_of.values()))

    def classes(self) -> list[list[VTuple]]:
        out: dict[int, list[VTuple]] = {}
        for t in sorted(self.color_of):
            out.setdefault(self.color_of[t], []).append(t)
        return [out[c] for c in sorted(out)]


def _multiset(items) -> Multiset:
    return tuple(sorted(Counter(items).items()))


def _check_individualization(g: Graph, ind: Sequence[int]) -> dict[int, int]:
    index: dict[int, int] = {}
    for pos, v in enumerate(ind):
        if not 0 <= v < g.n:
            raise PreconditionError(f"individualized vertex {v} is not a vertex of the graph")
        if v in index:
            raise PreconditionError(f"vertex {v} individualized twice")
        index[v] = pos
    return index


def _initial_names(g: Graph, k: int, ind: Sequence[int]) -> dict[VTuple, Hashable]:
    index = _check_individualization(g, ind)
    return {
        t: (tuple_type(g, t), tuple(index.get(v, -1) for v in t))
        for t in product(range(g.n), repeat=k)
    }


Signature = Callable[[dict[VTuple, int], VTuple], Multiset]


def _refine(
    k: int,
    graphs: Sequence[Graph],
    names: Sequence[dict[VTuple, Hashable]],
    signatures: Sequence[Signature],
    max_rounds: int | None,
) -> list[Coloring]:
    distinct = sorted({name for per_graph in names for name in per_graph.values()})
    number = {name: i for i, name in enumerate(distinct)}
    initial = {i: name for name, i in number.items()}
    colors = [{t: number[nm] for t, nm in per_graph.items()} for per_graph in names]
    count = len(distinct)
    rounds: list[dict[int, Definition]] = []
    stable = False

    while max_rounds is None or len(rounds) < max_rounds:
        detailed = [
            {t: (col[t], sig(col, t)) for t in col} for col, sig in zip(colors, signatures)
        ]
        distinct = sorted({d for per_graph in detailed for d in per_graph.values()})
        number = {d: i for i, d in enumerate(distinct)}
        rounds.append({i: d for d, i in number.items()})
        colors = [{t: number[d] for t, d in per_graph.items()} for per_graph in detailed]
        # refinement never merges, so an unchanged class count means no split
        if len(distinct) == count:
            stable = True
            break
        count = len(distinct)

    return [
        Coloring(k, g.n, col, dict(initial), [dict(r) for r in rounds], stable)
        for g, col in zip(graphs, colors)
    ]


def _wl1_signature(g: Graph) -> Signature:
    def sig(col: dict[VTuple, int], t: VTuple) -> Multiset:
        return _multiset((col[(w,)],) for w in g.neighbors(t[0]))

    return sig


def _wl2_signature(g: Graph) -> Signature:
    vertices = range(g.n)

    def sig(col: dict[VTuple, int], t: VTuple) -> Multiset:
        u, v = t
        # same order as the generic sift: position 1 replaced, then position 2
        return _multiset((col[(w, v)], col[(u, w)]) for w in vertices)

    return sig


def _sift_signature(g: Graph, k: int) -> Signature:
    vertices = range(g.n)
    if k == 1:
        # the bare 1-sift ignores edges; tag each w with adjacency to u
        def sig1(col: dict[VTuple, int], t: VTuple) -> Multiset:
            u = t[0]
            return _multiset((col[(w,)], g.has_edge(u, w)) for w in vertices)

        return sig1

    positions = range(k)

    def sig(col: dict[VTuple, int], t: VTuple) -> Multiset:
        return _multiset(
            tuple(col[t[:i] + (w,) + t[i + 1 :]] for i in positions) for w in vertices
        )

    return sig


def _check_budget(graphs: Sequence[Graph], k: int, budget: int) -> None:
    for g in graphs:
        if g.n**k > budget:
            raise MemoryBudgetError(
                f"WL[{k}] on {g.n} vertices needs n^k = {g.n}^{k} = {g.n**k} tuples, "
                f"over the budget of {budget}"
            )


def refine_together(
    graphs: Sequence[Graph],
    k: int,
    individualizations: Sequence[Sequence[int]] | None = None,
    *,
    method: Literal["auto", "generic"] = "auto",
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    max_rounds: int | None = None,
) -> list[Coloring]:
    """Refine several graphs simultaneously over one shared color namespace.

    With ``method="auto"`` dimensions 1 and 2 use the dedicated neighbor and
    pair updates; ``"generic"`` always uses the sift update.
    """
    if k < 1:
        raise PreconditionError(f"dimension must be positive, got {k}")
    inds = individualizations if individualizations is not None else [()] * len(graphs)
    if len(inds) != len(graphs):
        raise PreconditionError("one individualization per graph is required")
    _check_budget(graphs, k, memory_budget)
    names = [_initial_names(g, k, ind) for g, ind in zip(graphs, inds)]
    if method == "auto" and k == 1:
        sigs = [_wl1_signature(g) for g in graphs]
    elif method == "auto" and k == 2:
        sigs = [_wl2_signature(g) for g in graphs]
    else:
        sigs = [_sift_signature(g, k) for g in graphs]
    return _refine(k, graphs, names, sigs, max_rounds)


def wl1_refine(g: Graph, ind: Sequence[int] = (), *, max_rounds: int | None = None) -> Coloring:
    """Vertex color refinement by neighbor-color multisets."""
    return refine_together([g], 1, [ind], max_rounds=max_rounds)[0]


def wl2_refine(g: Graph, ind: Sequence[int] = (), *, max_rounds: int | None = None) -> Coloring:
    """Classical WL[2] on ordered pairs, including self-loops."""
    return refine_together([g], 2, [ind], max_rounds=max_rounds)[0]


def wlk_refine(
    g: Graph,
    k: int,
    ind: Sequence[int] = (),
    *,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    max_rounds: int | None = None,
) -> Coloring:
    """WL[k] on ordered k-tuples via the sift update."""
    return refine_together(
        [g], k, [ind], method="generic", memory_budget=memory_budget, max_rounds=max_rounds
    )[0]


# --- partitions --------------------------------------------------------------


def canonical_partition(labels: dict[VTuple, Hashable]) -> Partition:
    """Relabel blocks by first appearance in sorted tuple order."""
    block: dict[Hashable, int] = {}
    return {t: block.setdefault(labels[t], len(block)) for t in sorted(labels)}


def project_partition(c: Coloring) -> Partition:
    """Partition of (k-1)-tuples induced by repeating the last entry."""
    if c.dimension < 2:
        raise PreconditionError("projection needs a coloring of dimension at least 2")
    k = c.dimension - 1
    return canonical_partition(
        {t: c.color_of[t + (t[-1],)] for t in product(range(c.n), repeat=k)}
    )


def refines(finer: Partition, coarser: Partition) -> bool:
    """True iff every block of ``finer`` lies inside one block of ``coarser``."""
    if finer.keys() != coarser.keys():
        raise ValueError("partitions are over different tuple sets")
    image: dict[int, int] = {}
    return all(image.setdefault(finer[t], coarser[t]) == coarser[t] for t in finer)


# --- comparison and knowledge ---------------------------------------------------


def compare_invariants(
    g1: Graph, g2: Graph, k: int, *, memory_budget: int = DEFAULT_MEMORY_BUDGET
) -> Literal["equal", "different"]:
    c1, c2 = refine_together([g1, g2], k, memory_budget=memory_budget)
    return "equal" if c1.histogram() == c2.histogram() else "different"


class Knowledge(NamedTuple):
    """A stable color together with every definition it depends on."""

    color: int
    initial: tuple[tuple[int, Hashable], ...]
    rounds: tuple[tuple[tuple[int, Definition], ...], ...]


def tuple_knows(c: Coloring, t: Sequence[int]) -> Knowledge:
    t = tuple(t)
    if t not in c.color_of:
        raise PreconditionError(f"{t} is not a {c.dimension}-tuple of the graph")
    color = c.color_of[t]
    need = {color}
    chain = []
    for table in reversed(c.rounds):
        defs = tuple(sorted((cid, table[cid]) for cid in need))
        chain.append(defs)
        need = set()
        for _, (prev, ms) in defs:
            need.add(prev)
            for elem, _mult in ms:
                need.update(elem[: c.dimension])
    initial = tuple(sorted((cid, c.initial[cid]) for cid in need))
    return Knowledge(color, initial, tuple(reversed(chain)))


def coloring_report(c: Coloring) -> dict[str, Any]:
    """Machine-readable summary: dimension, definitions, histogram, stability."""

    def plain(x):
        return [plain(y) for y in x] if isinstance(x, tuple) else x

    rounds = [
        [
            {"id": cid, "previous": prev, "multiset": [[plain(e), mult] for e, mult in ms]}
            for cid, (prev, ms) in sorted(table.items())
        ]
        for table in c.rounds
    ]
    return {
        "dimension": c.dimension,
        "rounds": rounds,
        "histogram": {str(cid): cnt for cid, cnt in c.histogram().items()},
        "stable": c.stable,
    }
