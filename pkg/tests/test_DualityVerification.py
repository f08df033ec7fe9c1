import json
import random

import pytest

from cycleduality import (GraphValidationError, OrientedGraph, ResourceGuardError, SampleSpec, check_duality_pair,
                          check_path_duality, connected_components, enumerate_oriented_graphs, find_pattern_walk,
                          isomorphic, make_ac_cycle, make_b_cycle, make_directed_cycle, make_directed_path, make_q_path,
                          make_transitive_tournament, random_connected_oriented_graph, verify_dual_uniqueness)
from cycleduality.DualityVerification import separating_path_pattern


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_q_paths_and_ac_cycles_are_duality_pairs(n):
    report = check_duality_pair(make_q_path(n + 1), make_ac_cycle(n), 4)
    assert report.holds
    assert report.checked == 1 + 2 + 7 + 42
    assert report.exhaustive_up_to == 4
    assert report.sampled == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_directed_paths_and_transitive_tournaments_are_duality_pairs(n):
    assert check_duality_pair(make_directed_path(n + 1), make_transitive_tournament(n), 4).holds


def test_sampled_sweep():
    spec = SampleSpec(20, 5, 7, seed=1)
    report = check_duality_pair(make_q_path(6), make_ac_cycle(5), 3, spec)
    assert report.holds
    assert report.sampled == 20
    assert report.checked == 1 + 2 + 7 + 20
    again = check_duality_pair(make_q_path(6), make_ac_cycle(5), 3, spec)
    assert again.to_json() == report.to_json()


@pytest.mark.slow
def test_mismatched_pair_fails_at_order_five():
    report = check_duality_pair(make_q_path(6), make_ac_cycle(7), 5)
    assert not report.holds
    assert all(c.graph.order == 5 for c in report.counterexamples)


def test_wrong_dual_is_reported():
    report = check_duality_pair(make_directed_path(4), make_transitive_tournament(2), 3)
    assert report.checked == 10
    assert len(report.counterexamples) == 2
    assert {c.graph.size for c in report.counterexamples} == {2, 3}
    for c in report.counterexamples:
        assert not c.left_maps_in
        assert not c.maps_to_right
    payload = json.loads(report.to_json())
    assert payload["checked"] == 10
    assert len(payload["counterexamples"]) == 2
    assert payload["counterexamples"][0]["order"] == 3
    text = report.to_text().splitlines()
    assert text[:4] == ["checked: 10", "exhaustive_up_to: 3", "sampled: 0", "counterexamples: 2"]
    assert len(text) == 6


def test_order_cap():
    with pytest.raises(ResourceGuardError):
        check_duality_pair(make_q_path(6), make_ac_cycle(5), 6)


def test_sample_spec_validation():
    with pytest.raises(ValueError):
        SampleSpec(-1, 1, 2, seed=0)
    with pytest.raises(ValueError):
        SampleSpec(5, 0, 2, seed=0)
    with pytest.raises(ValueError):
        SampleSpec(5, 4, 3, seed=0)


def test_random_graphs_are_connected_and_seeded():
    a = random_connected_oriented_graph(8, random.Random(3))
    b = random_connected_oriented_graph(8, random.Random(3))
    assert a == b
    assert isinstance(a, OrientedGraph)
    assert len(connected_components(a)) == 1
    with pytest.raises(ValueError):
        random_connected_oriented_graph(0, random.Random(3))


def test_duals_are_unique():
    assert verify_dual_uniqueness(make_directed_path(3), make_transitive_tournament(2)) == []
    assert verify_dual_uniqueness(make_directed_path(4), make_transitive_tournament(3)) == []


def test_ac5_is_the_only_dual_of_q6():
    assert verify_dual_uniqueness(make_q_path(6), make_ac_cycle(5)) == []


@pytest.mark.slow
def test_ac5_is_the_only_dual_of_q6_among_five_vertex_candidates():
    assert verify_dual_uniqueness(make_q_path(6), make_ac_cycle(5), candidate_order=5) == []


def test_wrong_dual_has_offenders():
    offenders = verify_dual_uniqueness(make_directed_path(4), make_transitive_tournament(2))
    assert any(isomorphic(o, make_transitive_tournament(3)) for o in offenders)


def test_separating_pattern():
    q6, ac5 = make_q_path(6), make_ac_cycle(5)
    pattern = separating_path_pattern(q6, ac5, 10)
    assert pattern is not None
    assert len(pattern) <= 5
    assert find_pattern_walk(q6, pattern) is not None
    assert find_pattern_walk(ac5, pattern) is None
    assert separating_path_pattern(ac5, ac5, 10) is None


@pytest.mark.parametrize("cycle, kind", [
    (make_ac_cycle(5), "accycle(5)"),
    (make_ac_cycle(7), "accycle(7)"),
    (make_transitive_tournament(3), "accycle(3)"),
    (make_b_cycle(3, "FF"), "b-cycle"),
])
def test_path_duality_on_small_graphs(cycle, kind):
    for order in range(1, 5):
        for g in enumerate_oriented_graphs(order):
            report = check_path_duality(cycle, g)
            assert report.max_path_arcs == 2 * cycle.order
            assert report.cycle_kind == kind
            assert report.consistent
            if kind != "b-cycle":
                assert report.single_path_agrees


def test_path_duality_report_json():
    report = check_path_duality(make_ac_cycle(5), make_q_path(6))
    assert report.max_path_arcs == 10
    payload = json.loads(report.to_json())
    assert payload["maps_to_cycle"] is False
    assert payload["paths_map_to_cycle"] is False
    assert payload["separating_pattern"] is not None
    assert payload["consistent"] is True


def test_directed_cycles_are_not_recognised():
    with pytest.raises(GraphValidationError):
        check_path_duality(make_directed_cycle(3), make_directed_cycle(4))
    report = check_path_duality(make_directed_cycle(3), make_directed_cycle(4), max_path_arcs=8,
                                require_recognized=False)
    assert report.cycle_kind == "unrecognised"
    assert not report.maps_to_cycle
    assert report.paths_map_to_cycle
    assert not report.consistent


def test_path_duality_needs_a_cycle():
    with pytest.raises(GraphValidationError):
        check_path_duality(make_q_path(6), make_ac_cycle(5))


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_duality_pairs_on_sampled_graphs(n):
    report = check_duality_pair(make_q_path(n + 1), make_ac_cycle(n), 4, SampleSpec(500, 5, 8, seed=n))
    assert report.sampled == 500
    assert report.holds
