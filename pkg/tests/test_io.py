from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs
from edgebetti.complexes import cross_polytope_boundary
from edgebetti.graphs import cycle_graph
from edgebetti.io import (
    FormatError,
    format_edge_list,
    format_facets,
    parse_edge_list,
    parse_facets,
    parse_graph6,
    read_graph,
    to_graph6,
)


def test_edge_list_with_comments():
    g = parse_edge_list("# a comment\n\n4 4\n0 1\n1 2\n2 3\n# inline\n3 0\n")
    assert g == cycle_graph(4)


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n0 5\n", "3 1\n1 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_graph6_known_strings():
    # C5 and the Petersen graph in standard graph6
    assert parse_graph6("Dhc") == cycle_graph(5)
    petersen = parse_graph6("IheA@GUAo")
    assert petersen.n == 10 and petersen.edge_count == 15
    assert all(petersen.degree(v) == 3 for v in range(10))
    assert parse_graph6(">>graph6<<Dhc") == cycle_graph(5)
    with pytest.raises(FormatError):
        parse_graph6("D h")
    with pytest.raises(FormatError):
        parse_graph6("Dhcc")


@given(graphs(max_n=12))
def test_round_trips(g):
    assert parse_edge_list(format_edge_list(g, ["note"])) == g
    assert parse_graph6(to_graph6(g)) == g
    assert read_graph(to_graph6(g) + "\n") == g
    assert read_graph(format_edge_list(g)) == g


def test_large_graph6_header():
    g = cycle_graph(70)
    s = to_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


def test_facets_round_trip():
    c = cross_polytope_boundary(3)
    assert parse_facets(format_facets(c)) == c
    with pytest.raises(FormatError):
        parse_facets("3 2\n0 1 2\n")
