from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from edgebetti.betti import (
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
from edgebetti.graphs import (
    build_graph,
    complement,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    join_graph,
    relabel,
)
from edgebetti.homology import RATIONALS


def test_c5_table():
    t = hochster_table(cycle_graph(5))
    assert t.entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert regularity_and_pd(t) == (3, 2)
    assert str(jump_sequence(t)) == "[2;2]"


def test_edgeless_and_single_edge():
    t = hochster_table(edgeless_graph(3))
    assert t.entries == {(0, 0): 1}
    assert regularity_and_pd(t) == (0, 0)
    assert str(jump_sequence(t)) == "[1;∅]"
    t = hochster_table(build_graph(2, [(0, 1)]))
    assert t.entries == {(0, 0): 1, (1, 2): 1}
    assert regularity_and_pd(t) == (2, 0)


def test_cap_is_enforced():
    with pytest.raises(CapExceeded, match="--max-n"):
        hochster_table(cycle_graph(9), max_n=8)


def test_multigraded_entries():
    assert multigraded_betti(cycle_graph(5), range(5)) == [0, 0, 0, 1, 0, 0]
    assert multigraded_betti(cycle_graph(5), [0, 1]) == [0, 1, 0]
    assert multigraded_betti(cycle_graph(5), [0, 2]) == [0, 0, 0]
    with pytest.raises(ValueError):
        multigraded_betti(cycle_graph(5), [])
    with pytest.raises(ValueError):
        multigraded_betti(cycle_graph(5), [9])


def test_m2_layout():
    text = hochster_table(cycle_graph(5)).to_m2()
    assert text.splitlines() == [
        "       0 1 2 3",
        "total: 1 5 5 1",
        "    0: 1 . . .",
        "    1: . 5 5 .",
        "    2: . . . 1",
    ]


def test_serialisation_round_trip():
    t = hochster_table(cycle_graph(6))
    assert BettiTable.from_json(t.to_json()) == t
    assert t.to_csv().splitlines()[0] == "i,j,value"


def test_jump_sequence_validation():
    with pytest.raises(ValueError):
        JumpSequence(3, (2,))
    with pytest.raises(ValueError):
        JumpSequence(3, (4, 4))
    with pytest.raises(ValueError):
        JumpSequence(2, (0,))
    with pytest.raises(ValueError):
        RelativeJumpSequence(3, (1, 0))


def test_jump_sequence_rejects_gapped_rows():
    t = BettiTable(6, {(0, 0): 1, (1, 2): 3, (3, 6): 1})
    with pytest.raises(ValueError, match="row 2"):
        jump_sequence(t)


def test_corner_sum_examples():
    a, b = JumpSequence(6, (1, 2, 4, 6, 8)), JumpSequence(6, (1, 2, 3, 6, 9))
    c = corner_sum(a, b)
    assert str(c) == "[6;1,2,3,6,8]"
    assert str(c.relative()) == "[6;1,1,1,3,2]"
    assert corner_sum(JumpSequence(2, (2,)), JumpSequence(3, (3, 7))) == JumpSequence(3, (2, 7))
    assert corner_sum(JumpSequence(3, (4, 5)), JumpSequence(4, (1, 8, 9))) == JumpSequence(4, (1, 5, 9))


jumps = st.integers(1, 6).flatmap(
    lambda k: st.lists(st.integers(1, 4), min_size=k - 1, max_size=k - 1).map(
        lambda r: RelativeJumpSequence(k, tuple(r)).to_jump()
    )
)


@given(jumps, jumps)
def test_corner_sum_laws(a, b):
    c = corner_sum(a, b)
    assert c.k == max(a.k, b.k)
    assert corner_sum(b, a) == c
    assert corner_sum(a, a) == a
    assert relative_jump_sequence(c).to_jump() == c


@given(graphs(max_n=8))
def test_table_basics(g):
    t = hochster_table(g)
    assert t.get(0, 0) == 1
    assert t.get(1, 2) == g.edge_count
    # every column sums the multigraded pieces of its degree
    for j in range(1, g.n + 1):
        col = [0] * (j + 1)
        for w in combinations(range(g.n), j):
            for i, v in enumerate(multigraded_betti(g, w)):
                col[i] += v
        assert col == [t.get(i, j) for i in range(j + 1)]
        if j >= 4:
            break


@given(graphs(max_n=8))
def test_alternating_sum_vanishes(g):
    # the K-polynomial of R/I vanishes at t = 1 once the ideal is nonzero
    t = hochster_table(g)
    total = sum((-1) ** i * v for (i, _), v in t.entries.items())
    assert total == (0 if g.edge_count else 1)


@given(graphs(max_n=8))
def test_relabel_invariance_and_fields(g):
    t = hochster_table(g)
    perm = [(v * 3 + 1) % g.n for v in range(g.n)] if g.n % 3 else list(range(g.n))[::-1]
    assert hochster_table(relabel(g, perm)).entries == t.entries
    assert hochster_table(g, RATIONALS).entries == t.entries


@given(graphs(max_n=5), graphs(max_n=5))
def test_product_and_sum_formula(g, h):
    tg, th = hochster_table(g), hochster_table(h)
    assert table_product([tg, th]).entries == hochster_table(disjoint_union(g, h)).entries
    assert sum_formula_table(tg, th).entries == hochster_table(join_graph(g, h)).entries


def test_anticycle_tables_have_expected_jump():
    for n in range(5, 11):
        assert jump_sequence(hochster_table(complement(cycle_graph(n)))) == JumpSequence(2, (n - 3,))


def test_threads_do_not_change_results():
    g = complement(cycle_graph(11))
    assert hochster_table(g, threads=1) == hochster_table(g, threads=3)
