from __future__ import annotations

import pytest
from hypothesis import given

from conftest import brute_induced_matching, brute_matching, brute_min_induced_cycle, graphs
from edgebetti.graphs import (
    Graph,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    induced_matching_number,
    induced_subgraph,
    is_induced_c4_free,
    join_graph,
    matching_number,
    min_induced_cycle_length,
    path_graph,
    relabel,
)


def test_build_rejects_loops_and_range():
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


def test_cycle_invariants():
    assert [induced_matching_number(cycle_graph(n)) for n in range(4, 13)] == [n // 3 for n in range(4, 13)]
    assert [matching_number(cycle_graph(n)) for n in (4, 5, 6)] == [2, 2, 3]
    assert matching_number(complete_graph(6)) == 3
    assert min_induced_cycle_length(cycle_graph(9)) == 9
    assert min_induced_cycle_length(complete_graph(5)) is None
    assert min_induced_cycle_length(path_graph(6)) is None
    with pytest.raises(ValueError):
        min_induced_cycle_length(cycle_graph(3), floor=3)


def test_join_and_union_sizes():
    a, b = cycle_graph(4), path_graph(3)
    assert disjoint_union(a, b).edge_count == 4 + 2
    assert join_graph(a, b).edge_count == 4 + 2 + 12
    assert complement(edgeless_graph(4)) == complete_graph(4)


def test_induced_subgraph_relabels():
    g = induced_subgraph(cycle_graph(6), [0, 1, 2, 4])
    assert g.n == 4 and g.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        induced_subgraph(g, [7])


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


@given(graphs(max_n=7))
def test_matchings_against_brute_force(g):
    assert matching_number(g) == brute_matching(g)
    assert induced_matching_number(g) == brute_induced_matching(g)
    assert induced_matching_number(g) <= matching_number(g)


@given(graphs(max_n=8))
def test_min_induced_cycle_against_brute_force(g):
    assert min_induced_cycle_length(g) == brute_min_induced_cycle(g)
    assert min_induced_cycle_length(g, floor=5) == brute_min_induced_cycle(g, floor=5)


@given(graphs(max_n=8))
def test_c4_free_matches_cycle_search(g):
    assert is_induced_c4_free(g) == (brute_min_induced_cycle(g) != 4)


@given(graphs(min_n=1, max_n=8))
def test_ind_one_iff_complement_c4_free(g):
    if g.edge_count:
        assert (induced_matching_number(g) == 1) == is_induced_c4_free(complement(g))


@given(graphs(max_n=7))
def test_relabel_preserves_invariants(g):
    perm = list(reversed(range(g.n)))
    h = relabel(g, perm)
    assert h.edge_count == g.edge_count
    assert induced_matching_number(h) == induced_matching_number(g)
