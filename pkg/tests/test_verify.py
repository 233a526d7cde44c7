from __future__ import annotations

import json
from dataclasses import replace

from edgebetti.betti import JumpSequence, hochster_table, regularity_and_pd
from edgebetti.constructions import (
    anticycle_graph,
    cross_polytope_graph,
    drum_graph,
    grid_torus_graph,
    icosahedron_graph,
    torus_product_graph,
)
from edgebetti.graphs import (
    build_graph,
    complement,
    cycle_graph,
    induced_matching_number,
    is_induced_c4_free,
)
from edgebetti.io import parse_edge_list
from edgebetti.verify import (
    CheckReport,
    all_labeled_graphs,
    check_construction,
    check_eight_vertex_exclusion,
    check_jump_bound,
    check_product_law,
    check_small_graph_suite,
    check_sum_formulas,
    sample_graphs,
)


def test_labeled_graph_counts():
    assert [sum(1 for _ in all_labeled_graphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]


def test_samples_are_seeded_and_stratified():
    a = sample_graphs(40, 3, [7, 8, 9])
    assert a == sample_graphs(40, 3, [7, 8, 9])
    assert a != sample_graphs(40, 4, [7, 8, 9])
    stratum = [g for k, g in enumerate(a) if (k // 3) % 4 == 3]
    assert stratum and all(is_induced_c4_free(complement(g)) for g in stratum)


def test_jump_bound_examples():
    for c in (icosahedron_graph(), anticycle_graph(7), torus_product_graph([5, 5])):
        rep = check_jump_bound(c.graph)
        assert rep.passed and rep.cases == 1


def test_report_json_schema():
    rep = CheckReport("x", "pop", 3, ["2 1\n0 1\n"], True, 12)
    obj = json.loads(rep.to_json())
    assert set(obj) == {"check", "population", "cases", "violations", "partial", "millis"}
    assert json.loads(rep.to_json(timing=False))["millis"] == 0
    assert not rep.passed


def test_small_suite_is_deterministic_across_threads():
    a = check_small_graph_suite(4, 40, seed=5, threads=1)
    b = check_small_graph_suite(4, 40, seed=5, threads=3)
    assert a.passed and a.to_dict(False) == b.to_dict(False)
    assert a.cases == 1 + 2 + 8 + 64 + 40


def test_cycle_family_regularity_gap():
    # reg = Ind + 1 holds for C4 and C6 but not C5
    gaps = {n: regularity_and_pd(hochster_table(cycle_graph(n)))[0] - induced_matching_number(cycle_graph(n)) - 1
            for n in range(4, 13)}
    assert gaps[4] == gaps[6] == 0 and gaps[5] == 1
    assert all(gaps[n] == (1 if n % 3 == 2 else 0) for n in gaps)


def test_eight_vertex_small_run():
    rep = check_eight_vertex_exclusion(sample=30, seed=2)
    assert rep.passed and rep.cases == 33


def test_formula_checks():
    assert check_sum_formulas(10, seed=1).passed
    assert check_product_law(10, seed=1).passed


def test_constructions_pass():
    for c in (drum_graph(5), cross_polytope_graph(3), torus_product_graph([4, 6]), anticycle_graph(8)):
        rep = check_construction(c)
        assert rep.passed, rep.violations
        assert not rep.partial


def test_out_of_cap_construction_is_partial():
    rep = check_construction(grid_torus_graph(6, 6))
    assert rep.passed and rep.partial
    rep = check_construction(drum_graph(6), max_n=10)
    assert rep.passed and rep.partial


def test_wrong_claim_yields_reproducible_witness():
    bad = replace(anticycle_graph(6), expected_jump=JumpSequence(2, (2,)))
    rep = check_construction(bad)
    assert len(rep.violations) == 2  # jump mismatch and relative/jump disagreement
    g = parse_edge_list(rep.violations[0])
    assert g == bad.graph


def test_jump_bound_witness_format():
    g = build_graph(3, [(0, 1)])
    rep = check_jump_bound(g)
    assert rep.passed and rep.notes
