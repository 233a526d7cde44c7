from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from edgebetti import _pure
from edgebetti._linalg import bareiss_rank, rank_mod_p_dense, rank_mod_p_sparse
from edgebetti.complexes import (
    boundary_of_simplex,
    clique_complex,
    cross_polytope_boundary,
    empty_complex,
    from_facets,
    sd4,
    stanley_reisner_complex,
)
from edgebetti.graphs import cycle_graph
from edgebetti.homology import (
    RATIONALS,
    BoundaryMatrix,
    FieldSpec,
    boundary_matrix,
    rank,
    reduced_homology_dims,
)


def test_field_spec_validation():
    assert FieldSpec(0).exact
    assert str(FieldSpec(7)) == "GF(7)"
    for bad in (2, 4, 32001 * 3, -5):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_known_profiles():
    assert reduced_homology_dims(cross_polytope_boundary(3)).nonzero() == {2: 1}
    assert reduced_homology_dims(clique_complex(cycle_graph(5))).nonzero() == {1: 1}
    assert reduced_homology_dims(empty_complex()).nonzero() == {-1: 1}
    assert reduced_homology_dims(from_facets(3, [(0,), (1,), (2,)])).nonzero() == {0: 2}
    assert reduced_homology_dims(sd4(boundary_of_simplex(3)), RATIONALS).nonzero() == {2: 1}


def _projective_plane():
    # six-vertex RP^2; its only homology is 2-torsion, invisible over the odd-characteristic fields allowed here
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)]
    return from_facets(6, facets)


def test_projective_plane_is_acyclic_over_odd_fields():
    rp2 = _projective_plane()
    assert reduced_homology_dims(rp2, RATIONALS).nonzero() == {}
    assert reduced_homology_dims(rp2, FieldSpec(3)).nonzero() == {}
    assert reduced_homology_dims(rp2, FieldSpec(32003)).nonzero() == {}


def test_boundary_squares_to_zero():
    c = cross_polytope_boundary(4)
    for d in range(1, c.top_dim + 1):
        a = sympy.Matrix(boundary_matrix(c, d).to_dense())
        b = sympy.Matrix(boundary_matrix(c, d + 1).to_dense()) if d < c.top_dim else None
        if b is not None and b.cols:
            assert (a * b).is_zero_matrix
    with pytest.raises(ValueError):
        boundary_matrix(c, c.top_dim + 2)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_ranks_against_sympy(rows, cols, seed):
    rng = random.Random(seed)
    dense = [[rng.choice((-1, 0, 0, 1, 2)) for _ in range(cols)] for _ in range(rows)]
    expected = sympy.Matrix(dense).rank()
    assert bareiss_rank(dense) == expected
    columns = tuple(tuple((r, dense[r][c]) for r in range(rows) if dense[r][c]) for c in range(cols))
    m = BoundaryMatrix(rows, cols, columns)
    assert rank(m, RATIONALS) == expected
    # over a large prime these small matrices keep their rational rank
    assert rank(m, FieldSpec(32003)) == expected
    assert rank_mod_p_sparse(columns, 32003)[0] == expected
    assert rank_mod_p_dense(dense, 32003) == expected
    assert _pure.rank_mod_p(dense, 32003) == expected


@given(graphs(max_n=8))
def test_euler_characteristic_matches_f_vector(g):
    d = stanley_reisner_complex(g)
    prof = reduced_homology_dims(d)
    chi = -1 + sum((-1) ** k * f for k, f in enumerate(d.f_vector))
    assert prof.euler_characteristic == chi
    assert prof == reduced_homology_dims(d, RATIONALS)


@given(graphs(min_n=1, max_n=8))
def test_h0_counts_components(g):
    from edgebetti.complexes import connected_components

    d = stanley_reisner_complex(g)
    assert reduced_homology_dims(d).at(0) == connected_components(d) - 1
