"""Weisfeiler-Lehman refinement, CFI graph pairs, and exact cycle/clique counting."""

from wlgraph.cfi import CfiGraph, GlobalGraph, build_cfi, gadget_exchange, k4_global
from wlgraph.enumeration import (
    CycleCensus,
    count_cliques,
    count_cycles_brute,
    count_paths_between,
    per_vertex_cycles,
)
from wlgraph.formulas import (
    PairProfile,
    formula_4cycles,
    formula_5cycles,
    formula_6cycles,
    formula_triangles,
    pair_path4,
    pair_profile,
)
from wlgraph.graph import Graph, TupleType, load_graph, random_graph, tuple_type
from wlgraph.iso import is_isomorphic
from wlgraph.wl import (
    Coloring,
    compare_invariants,
    project_partition,
    refine_together,
    tuple_knows,
    wl1_refine,
    wl2_refine,
    wlk_refine,
)

__version__ = "0.1.0"
