import pytest
from hypothesis import given

from cycleduality import (Digraph, GraphValidationError, OrientedGraph, connected_components, enumerate_oriented_graphs,
                          exists_hom, is_balanced, levels, make_ac_cycle, make_directed_cycle, make_directed_path,
                          make_q_path)
from cycleduality.LevelAssignment import component_levels

from strategies import oriented_graphs


def test_levels_of_q5():
    assignment = levels(make_q_path(5))
    assert assignment.as_tuple() == (0, 1, 2, 1, 0)
    assert assignment.height == 2
    assert assignment.vertices_at(1) == [1, 3]
    assert assignment[2] == 2


def test_even_ac_cycles_are_balanced():
    assert is_balanced(make_ac_cycle(4))
    assert levels(make_ac_cycle(4)).height == 1
    assert not is_balanced(make_ac_cycle(5))
    assert not is_balanced(make_directed_cycle(3))


def test_levels_need_connected_balanced_input():
    with pytest.raises(GraphValidationError):
        levels(make_directed_cycle(3))
    with pytest.raises(GraphValidationError):
        levels(OrientedGraph(3, [(0, 1)]))


def test_symmetric_pairs_are_unbalanced():
    assert not is_balanced(Digraph(2, [(0, 1), (1, 0)]))


def test_components_are_ordered_by_smallest_vertex():
    g = OrientedGraph(5, [(3, 2), (0, 4)])
    assert connected_components(g) == [frozenset({0, 4}), frozenset({1}), frozenset({2, 3})]


def test_component_levels():
    g = OrientedGraph(5, [(3, 2), (0, 4), (1, 4)])
    assignments = component_levels(g)
    assert [a.height for a in assignments] == [1, 1]
    assert component_levels(make_directed_cycle(4)) is None


@pytest.mark.parametrize("order", range(1, 5))
def test_balanced_iff_maps_to_a_directed_path(order):
    for g in enumerate_oriented_graphs(order):
        assert is_balanced(g) == (exists_hom(g, make_directed_path(order)) is not None)


@given(g=oriented_graphs(max_order=7))
def test_balanced_iff_maps_to_a_directed_path_on_random_graphs(g):
    assert is_balanced(g) == (exists_hom(g, make_directed_path(g.order)) is not None)
