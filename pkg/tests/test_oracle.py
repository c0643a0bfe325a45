import random

import pytest
from hypothesis import given, settings, strategies as st

from bipartite_species.oracle import (
    FAMILIES,
    ColoredSmallGraph,
    SmallGraph,
    canonical_colored_form,
    canonical_form,
    is_bipartite,
    is_connected,
    is_two_connected,
    oracle_count,
    vertex_pairs,
)

# hand-checked counts for n = 0..6
FROZEN = {
    "bicolored": [1, 2, 4, 8, 17, 38, 94],
    "connected-bicolored": [0, 2, 1, 2, 4, 10, 27],
    "bicolored-tau-symmetric": [1, 0, 2, 0, 5, 0, 16],
    "bipartite": [1, 1, 2, 3, 7, 13, 35],
    "connected-bipartite": [0, 1, 1, 1, 3, 5, 17],
    "bipartite-block": [0, 1, 1, 0, 1, 1, 5],
}


@pytest.mark.parametrize("family", FAMILIES)
def test_frozen_counts(family):
    assert [oracle_count(family, n) for n in range(7)] == FROZEN[family]


def test_graphs_on_four_vertices():
    forms = {canonical_form(SmallGraph(4, a)) for a in range(1 << 6)}
    assert len(forms) == 11


def test_predicates():
    c4 = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    path = SmallGraph.from_edges(3, [(0, 1), (1, 2)])
    triangle = SmallGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert is_bipartite(c4) and is_two_connected(c4)
    assert is_bipartite(path) and is_connected(path) and not is_two_connected(path)
    assert not is_bipartite(triangle) and is_two_connected(triangle)
    assert is_two_connected(SmallGraph(1)) and is_two_connected(SmallGraph.from_edges(2, [(0, 1)]))
    assert not is_connected(SmallGraph(0))
    assert not is_connected(SmallGraph(2))


def test_bitset_order():
    g = SmallGraph.from_edges(3, [(0, 1)])
    assert vertex_pairs(3) == ((0, 1), (0, 2), (1, 2))
    assert g.adjacency == 0b100
    assert g.edges() == [(0, 1)]


def test_guards():
    with pytest.raises(ValueError):
        SmallGraph(9)
    with pytest.raises(ValueError):
        SmallGraph(3, 1 << 3)
    with pytest.raises(ValueError):
        SmallGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        ColoredSmallGraph(SmallGraph.from_edges(2, [(0, 1)]), 0b11)
    with pytest.raises(ValueError):
        oracle_count("bipartite", 7)
    with pytest.raises(ValueError):
        oracle_count("trees", 3)


@pytest.mark.slow
def test_opt_in_seven():
    assert oracle_count("bipartite-block", 7, allow_seven=True) == 8


graphs = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << len(vertex_pairs(n))) - 1), st.permutations(range(n)))
)


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_canonical_form_is_relabeling_invariant(case):
    n, adj, perm = case
    g = SmallGraph(n, adj)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert is_bipartite(g) == is_bipartite(h)
    assert is_two_connected(g) == is_two_connected(h)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.randoms(use_true_random=False))
def test_colored_form_invariance(n, rnd):
    colors = rnd.getrandbits(n)
    edges = [(u, v) for u, v in vertex_pairs(n) if (colors >> u & 1) != (colors >> v & 1) and rnd.random() < 0.5]
    g = ColoredSmallGraph(SmallGraph.from_edges(n, edges), colors)
    perm = list(range(n))
    rnd.shuffle(perm)
    moved = sum(1 << perm[v] for v in range(n) if colors >> v & 1)
    h = ColoredSmallGraph(g.graph.relabel(perm), moved)
    assert canonical_colored_form(g) == canonical_colored_form(h)


def test_swapping_colors_changes_form_unless_symmetric():
    star = ColoredSmallGraph(SmallGraph.from_edges(3, [(0, 1), (0, 2)]), 0b001)
    swapped = ColoredSmallGraph(star.graph, 0b110)
    assert canonical_colored_form(star) != canonical_colored_form(swapped)
    edge = ColoredSmallGraph(SmallGraph.from_edges(2, [(0, 1)]), 0b01)
    assert canonical_colored_form(edge) == canonical_colored_form(ColoredSmallGraph(edge.graph, 0b10))
