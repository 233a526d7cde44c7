from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs
from edgebetti.complexes import (
    SimplicialComplex,
    boundary_of_simplex,
    clique_complex,
    connected_components,
    cross_polytope_boundary,
    from_facets,
    induced_subcomplex,
    is_flag,
    join_complex,
    sd4,
    stanley_reisner_complex,
)
from edgebetti.graphs import complement, complete_graph, cycle_graph, is_induced_c4_free, min_induced_cycle_length


def test_audit_rejects_bad_complexes():
    with pytest.raises(ValueError):
        SimplicialComplex(2, (((0,), (1,)), ((0, 2),)))  # vertex out of range
    with pytest.raises(ValueError):
        SimplicialComplex(3, (((0,), (1,), (2,)), ((0, 1),), ((0, 1, 2),)))  # missing edges
    with pytest.raises(ValueError):
        SimplicialComplex(2, (((0,),),))  # missing vertex


def test_octahedron_and_cross_polytopes():
    octa = cross_polytope_boundary(3)
    assert octa.f_vector == (6, 12, 8)
    assert is_flag(octa)
    assert cross_polytope_boundary(4).f_vector == (8, 24, 32, 16)


def test_hollow_triangle_is_not_flag():
    assert not is_flag(boundary_of_simplex(2))
    assert is_flag(clique_complex(cycle_graph(4)))


def test_clique_complex_dimension_cap():
    assert clique_complex(complete_graph(5)).top_dim == 4
    assert clique_complex(complete_graph(5), max_dim=2).f_vector == (5, 10, 10)
    with pytest.raises(ValueError):
        clique_complex(complete_graph(3), max_dim=-1)


def test_join_of_two_point_sets_is_square():
    pts = from_facets(2, [(0,), (1,)])
    sq = join_complex(pts, pts)
    assert sq.f_vector == (4, 4)
    assert sq.skeleton_graph().edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert connected_components(join_complex(pts, from_facets(0, []))) == 2


def test_sd4_single_triangle_and_tetrahedron():
    one = sd4(from_facets(3, [(0, 1, 2)]))
    assert one.n == 9 and one.f_vector[2] == 10
    s = sd4(boundary_of_simplex(3))
    assert s.f_vector == (22, 60, 40)
    assert is_flag(s)
    h = s.skeleton_graph()
    assert is_induced_c4_free(h)
    assert min_induced_cycle_length(h) >= 5


def test_sd4_rejects_non_pure_input():
    with pytest.raises(ValueError):
        sd4(from_facets(4, [(0, 1, 2), (2, 3)]))


@given(graphs(max_n=7))
def test_stanley_reisner_is_flag_with_complement_skeleton(g):
    d = stanley_reisner_complex(g)
    assert is_flag(d)
    assert d.skeleton_graph() == complement(g)


@given(graphs(min_n=1, max_n=7))
def test_induced_subcomplex_matches_induced_graph(g):
    d = stanley_reisner_complex(g)
    w = [v for v in range(g.n) if v % 2 == 0]
    sub = induced_subcomplex(d, w)
    assert sub.n == len(w)
    assert sum(sub.f_vector) == sum(1 for layer in d.faces for f in layer if all(v in w for v in f))
