"""Graded Betti tables, regularity and jump sequences of edge ideals.

The Stanley-Reisner complex of the edge ideal of ``G`` is the clique
complex of the complement of ``G``; Hochster's formula turns its induced
subcomplexes' reduced homology into Betti numbers.
"""

from __future__ import annotations

from ._backend import COMPILED, NAME as BACKEND
from .betti import (
    BettiTable,
    CapExceeded,
    JumpSequence,
    RelativeJumpSequence,
    corner_sum,
    hochster_table,
    jump_sequence,
    multigraded_betti,
    regularity_and_pd,
    relative_jump_sequence,
    sum_formula_table,
    table_product,
)
from .complexes import (
    SimplicialComplex,
    clique_complex,
    cross_polytope_boundary,
    is_flag,
    join_complex,
    sd4,
    stanley_reisner_complex,
)
from .constructions import (
    NamedConstruction,
    anticycle_graph,
    corner_sum_graph,
    cross_polytope_graph,
    drum_graph,
    grid_torus_graph,
    icosahedron_graph,
    torus_product_graph,
)
from .graphs import (
    Graph,
    build_graph,
    complement,
    cycle_graph,
    disjoint_union,
    induced_matching_number,
    induced_subgraph,
    is_induced_c4_free,
    join_graph,
    matching_number,
    min_induced_cycle_length,
)
from .homology import DEFAULT_FIELD, RATIONALS, FieldSpec, reduced_homology_dims

__version__ = "0.1.0"
