import random
from itertools import combinations, permutations

import pytest

from wlgraph.cfi import (
    PAIRS,
    CfiGraph,
    GlobalGraph,
    build_cfi,
    dump_cfi,
    exchange_moved_flips,
    gadget_exchange,
    k4_global,
    load_cfi,
    load_global,
)
from wlgraph.errors import GraphFormatError, PreconditionError
from wlgraph.graph import (
    Graph,
    complete_bipartite,
    cube_graph,
    cycle_graph,
    dump_graph,
    load_graph,
    petersen_graph,
)
from wlgraph.iso import is_isomorphic
from wlgraph.wl import wl2_refine

CUBIC = {
    "K4": k4_global(),
    "K33": GlobalGraph.with_default_labels(complete_bipartite(3, 3)),
    "cube": GlobalGraph.with_default_labels(cube_graph()),
    "Petersen": GlobalGraph.with_default_labels(petersen_graph()),
}


class TestK4Global:
    def test_shape(self):
        h = k4_global()
        assert h.graph.n == 4 and h.graph.m == 6
        assert h.graph.degrees() == [3, 3, 3, 3]

    def test_labels(self):
        h = k4_global()
        assert h.labels[(0, 1)] == "a" and h.labels[(1, 0)] == "c"
        assert h.labels[(3, 0)] == "a" and h.labels[(0, 3)] == "c"
        assert h.labels[(0, 2)] == h.labels[(2, 0)] == "b"
        assert h.labels[(1, 3)] == h.labels[(3, 1)] == "b"

    def test_outgoing_labels(self):
        h = k4_global()
        for v in range(4):
            assert sorted(h.labels[(v, w)] for w in h.graph.neighbors(v)) == ["a", "b", "c"]


def test_partitions_are_the_three_pairings():
    pairings = {frozenset(map(frozenset, pair)) for pair in PAIRS.values()}
    all_pairings = {
        frozenset({frozenset({0, j}), frozenset(set(range(4)) - {0, j})}) for j in (1, 2, 3)
    }
    assert pairings == all_pairings


class TestBuild:
    def test_k4_counts(self):
        g = build_cfi(k4_global()).product
        assert g.n == 16 and g.m == 48
        assert set(g.degrees()) == {6}

    @pytest.mark.parametrize("name", sorted(CUBIC))
    def test_counts(self, name):
        h = CUBIC[name]
        g = build_cfi(h).product
        assert g.n == 4 * h.graph.n and g.m == 8 * h.graph.m

    def test_no_edges_inside_gadgets(self):
        g = build_cfi(k4_global(), [(1, 3)]).product
        assert all(u // 4 != v // 4 for u, v in g.edges)

    def test_paper_example_matching(self):
        # (u, v) labelled a, (v, u) labelled b: bottom u to left v, top u to right v
        h = GlobalGraph(
            Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            {
                (0, 1): "a", (1, 0): "b",
                (0, 2): "b", (2, 0): "a",
                (0, 3): "c", (3, 0): "c",
                (1, 2): "c", (2, 1): "b",
                (1, 3): "a", (3, 1): "a",
                (2, 3): "c", (3, 2): "b",
            },
        )
        g = build_cfi(h).product
        between = {(u % 4, v % 4) for u, v in g.edges if u // 4 == 0 and v // 4 == 1}
        assert between == {(i, j) for i in (0, 1) for j in (0, 3)} | {
            (i, j) for i in (2, 3) for j in (1, 2)
        }
        flipped = build_cfi(h, [(0, 1)]).product
        between = {(u % 4, v % 4) for u, v in flipped.edges if u // 4 == 0 and v // 4 == 1}
        assert between == {(i, j) for i in (0, 1) for j in (1, 2)} | {
            (i, j) for i in (2, 3) for j in (0, 3)
        }

    def test_flip_set_semantics(self):
        h = k4_global()
        assert build_cfi(h, [(1, 3), (3, 1)]).product == build_cfi(h, [(1, 3)]).product
        assert build_cfi(h, [(1, 3), (1, 3)]).flips == frozenset({(1, 3)})

    def test_unknown_flip(self):
        with pytest.raises(PreconditionError):
            build_cfi(CUBIC["K33"], [(0, 1)])

    def test_rejects_non_cubic(self):
        with pytest.raises(PreconditionError, match="3-regular"):
            GlobalGraph.with_default_labels(cycle_graph(5))

    def test_rejects_repeated_label(self):
        h = k4_global()
        bad = dict(h.labels)
        bad[(0, 1)] = "b"
        with pytest.raises(PreconditionError):
            GlobalGraph(h.graph, bad)

    def test_gadget_map(self):
        assert CfiGraph.vertex(3, 2) == 14
        assert CfiGraph.corner(14) == (3, 2)


class TestExchange:
    @pytest.mark.parametrize("kind", ["BottomTop", "LeftRight"])
    def test_involution_and_locality(self, kind):
        g = build_cfi(k4_global())
        for v in range(4):
            perm = gadget_exchange(g, v, kind)
            assert [perm[perm[x]] for x in range(16)] == list(range(16))
            assert all(perm[x] == x for x in range(16) if x // 4 != v)

    def test_bottom_top_swaps_sets(self):
        perm = gadget_exchange(build_cfi(k4_global()), 0, "BottomTop")
        assert {perm[0], perm[1]} == {2, 3}
        perm = gadget_exchange(build_cfi(k4_global()), 0, "LeftRight")
        assert {perm[0], perm[3]} == {1, 2}

    @pytest.mark.parametrize("name", sorted(CUBIC))
    @pytest.mark.parametrize("kind", ["BottomTop", "LeftRight"])
    def test_relocates_flips(self, name, kind):
        h = CUBIC[name]
        rng = random.Random(name + kind)
        edges = h.graph.sorted_edges()
        for v in range(h.graph.n):
            flips = set(rng.sample(edges, rng.randint(0, 3)))
            g = build_cfi(h, flips)
            moved = exchange_moved_flips(h, v, kind)
            assert len(moved) == 2
            image = g.product.relabel(gadget_exchange(g, v, kind))
            assert image == build_cfi(h, flips ^ moved).product

    def test_candidate_search(self):
        # every corner permutation mapping Bottom onto Top and keeping all
        # three pairings intact moves a flip between two incident edges
        h = k4_global()
        top = {2, 3}
        good = []
        for sigma in permutations(range(4)):
            if {sigma[0], sigma[1]} != top:
                continue
            keeps = all(
                {frozenset({sigma[p[0][0]], sigma[p[0][1]]}), frozenset({sigma[p[1][0]], sigma[p[1][1]]})}
                == {frozenset(p[0]), frozenset(p[1])}
                for p in PAIRS.values()
            )
            if not keeps:
                continue
            perm = list(range(16))
            for j in range(4):
                perm[j] = sigma[j]
            relocated = build_cfi(h, [(0, 1)]).product.relabel(perm)
            if any(relocated == build_cfi(h, [e]).product for e in [(0, 2), (0, 3)]):
                good.append(sigma)
        assert (3, 2, 1, 0) in good


class TestFacts:
    def test_flip_relocation_along_shared_vertex(self):
        h = k4_global()
        for e, f in combinations(h.graph.sorted_edges(), 2):
            if set(e) & set(f):
                assert is_isomorphic(build_cfi(h, [e]).product, build_cfi(h, [f]).product)

    def test_parity(self):
        h = k4_global()
        plain = build_cfi(h).product
        twisted = build_cfi(h, [(1, 3)]).product
        edges = h.graph.sorted_edges()
        rng = random.Random(2024)
        for _ in range(10):
            flips = rng.sample(edges, rng.randint(0, 6))
            g = build_cfi(h, flips).product
            even = len(flips) % 2 == 0
            assert (is_isomorphic(g, plain) is not None) == even
            assert (is_isomorphic(g, twisted) is not None) == (not even)

    def test_two_flips_isomorphic(self):
        h = k4_global()
        assert is_isomorphic(build_cfi(h).product, build_cfi(h, [(0, 1), (1, 2)]).product)

    def test_pair_not_isomorphic(self, cfi_pair):
        assert is_isomorphic(*cfi_pair) is None

    def test_vertex_transitive_at_wl2(self, cfi_pair):
        for g in cfi_pair:
            c = wl2_refine(g)
            assert len({c.color_of[(v, v)] for v in range(16)}) == 1


class TestFiles:
    def test_round_trip(self):
        g = build_cfi(CUBIC["cube"], [(0, 1), (2, 3)])
        again = load_cfi(dump_cfi(g))
        assert again == g

    def test_plain_reader_sees_product(self):
        g = build_cfi(k4_global(), [(1, 3)])
        text = dump_cfi(g)
        assert text.splitlines()[0] == "16 48"
        assert load_graph(text) == g.product

    def test_tampered_file(self):
        text = dump_cfi(build_cfi(k4_global()))
        with pytest.raises(GraphFormatError):
            load_cfi(text.replace("# cfi flip", "#").replace("# cfi global 4 6", "# cfi global 4 6\n# cfi flip 1 3"))

    def test_load_global_with_labels(self):
        h = k4_global()
        text = dump_graph(h.graph) + "".join(
            f"# label {u} {v} {lab}\n" for (u, v), lab in sorted(h.labels.items())
        )
        assert load_global(text) == h

    def test_load_global_default_labels(self):
        h = load_global(dump_graph(petersen_graph()))
        assert h == GlobalGraph.with_default_labels(petersen_graph())
