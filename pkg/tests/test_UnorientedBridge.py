from itertools import combinations

import networkx as nx
import pytest

from cycleduality import (ColouringMethod, ContainmentMode, ForbiddenSet, GraphValidationError, Orientation,
                          OrientedGraph, ResourceGuardError, UndirectedGraph, contains_forbidden, cycle_colourable,
                          enumerate_undirected_graphs, find_f_free_orientation, five_cycle_statements,
                          make_ac_cycle, make_c4_prime, make_directed_cycle, make_directed_path, make_q_path,
                          make_transitive_tournament, make_undirected_cycle, rghv_colourability, undirected_hom)


def complete_graph(n):
    return UndirectedGraph(n, combinations(range(n), 2))


def is_cycle_hom(g, mapping, k):
    return all((mapping[u] - mapping[v]) % k in (1, k - 1) for (u, v) in g.edges)


def test_orientations_cover_every_edge_once():
    c4 = make_undirected_cycle(4)
    o = Orientation(c4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    assert o.arcs == ((0, 1), (0, 3), (2, 1), (2, 3))
    assert o.is_acyclic()
    assert o.longest_path_vertices() == 2
    with pytest.raises(GraphValidationError):
        Orientation(c4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(GraphValidationError):
        Orientation(c4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)])


def test_orientation_of_an_oriented_graph():
    o = Orientation.from_oriented_graph(make_directed_cycle(4))
    assert o.host == make_undirected_cycle(4)
    assert not o.is_acyclic()
    assert o.oriented_graph == make_directed_cycle(4)


def test_forbidden_sets():
    assert len(ForbiddenSet.five_cycle()) == 8
    acyclic = ForbiddenSet.five_cycle_acyclic()
    assert len(acyclic) == 6
    assert acyclic.acyclic_required
    assert len(ForbiddenSet.from_images(6)) == 22
    induced = ForbiddenSet.from_images(6, ContainmentMode.INDUCED, acyclic_required=True)
    assert induced.mode is ContainmentMode.INDUCED
    with pytest.raises(GraphValidationError):
        ForbiddenSet([make_directed_path(3), OrientedGraph(3, [(2, 1), (1, 0)])])
    with pytest.raises(ResourceGuardError):
        ForbiddenSet([make_directed_path(9)])


def test_contains_forbidden():
    five = ForbiddenSet.five_cycle()
    assert contains_forbidden(make_ac_cycle(5), five) is None
    witness = contains_forbidden(make_q_path(6), five)
    assert witness.member_index == 5
    assert witness.embedding == (0, 1, 2, 3, 4, 5)
    assert contains_forbidden(make_transitive_tournament(4), five).member_index == 1


def test_induced_containment_is_weaker():
    paths = [make_directed_path(4)]
    assert contains_forbidden(make_c4_prime(), ForbiddenSet(paths)) is not None
    assert contains_forbidden(make_c4_prime(), ForbiddenSet(paths, ContainmentMode.INDUCED)) is None


def test_f_free_orientations():
    five = ForbiddenSet.five_cycle()
    o = find_f_free_orientation(make_undirected_cycle(5), five)
    assert o is not None
    assert contains_forbidden(o, five) is None
    assert find_f_free_orientation(complete_graph(3), five) is None
    with pytest.raises(ResourceGuardError):
        find_f_free_orientation(complete_graph(7), five)


def test_undirected_hom():
    mapping = undirected_hom(make_undirected_cycle(5), complete_graph(3))
    assert mapping is not None
    assert undirected_hom(complete_graph(3), make_undirected_cycle(5)) is None


@pytest.mark.parametrize("method", list(ColouringMethod))
def test_cycle_colourability(method):
    c5, c7 = make_undirected_cycle(5), make_undirected_cycle(7)
    result = cycle_colourable(c5, 5, method)
    assert result.colourable
    assert is_cycle_hom(c5, result.mapping, 5)
    result = cycle_colourable(c7, 5, method)
    assert result.colourable
    assert is_cycle_hom(c7, result.mapping, 5)
    assert not cycle_colourable(c5, 7, method).colourable
    assert not cycle_colourable(complete_graph(3), 5, method).colourable
    if method is not ColouringMethod.HOM:
        assert result.orientation is not None
        assert result.orientation.host == c7


def test_petersen_graph():
    petersen = UndirectedGraph(10, nx.petersen_graph().edges())
    # the outer 5-cycle has to wind once around C_5, the inner pentagram then breaks an edge
    assert not cycle_colourable(petersen, 5).colourable
    three = cycle_colourable(petersen, 3)
    assert three.colourable
    assert is_cycle_hom(petersen, three.mapping, 3)
    assert not cycle_colourable(petersen, 4).colourable


def test_even_cycles_are_bipartite_checks():
    result = cycle_colourable(make_undirected_cycle(6), 4)
    assert result.colourable
    assert is_cycle_hom(make_undirected_cycle(6), result.mapping, 4)
    assert not cycle_colourable(make_undirected_cycle(5), 4).colourable
    with pytest.raises(ValueError):
        cycle_colourable(make_undirected_cycle(5), 2)


def test_colouring_methods_agree():
    for order in range(1, 6):
        for g in enumerate_undirected_graphs(order):
            answers = {m: cycle_colourable(g, 5, m).colourable for m in ColouringMethod}
            assert len(set(answers.values())) == 1, (g, answers)


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_five_cycle_statements_agree(order):
    for g in enumerate_undirected_graphs(order):
        assert five_cycle_statements(g).agree, g


@pytest.mark.slow
def test_five_cycle_statements_agree_on_order_six():
    for g in enumerate_undirected_graphs(6):
        assert five_cycle_statements(g).agree, g


def test_induced_mode_accepts_whatever_subgraph_mode_accepts():
    for order in range(1, 6):
        for g in enumerate_undirected_graphs(order):
            subgraph = five_cycle_statements(g)
            induced = five_cycle_statements(g, ContainmentMode.INDUCED)
            assert induced.hom == subgraph.hom
            assert induced.pattern_free == subgraph.pattern_free
            if subgraph.forbidden_free:
                assert induced.forbidden_free


def test_rghv_on_complete_graphs():
    k4 = complete_graph(4)
    result = rghv_colourability(k4, 3)
    assert not result.colourable
    assert result.orientation is None
    assert result.agree
    result = rghv_colourability(k4, 4)
    assert result.colourable
    assert len(set(result.colouring)) == 4
    assert result.orientation.is_acyclic()
    assert result.orientation.longest_path_vertices() == 4


def test_rghv_guards():
    with pytest.raises(ValueError):
        rghv_colourability(make_undirected_cycle(5), 0)
    with pytest.raises(ResourceGuardError):
        rghv_colourability(make_undirected_cycle(11), 3)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_rghv_sides_agree(k):
    for order in range(1, 6):
        for g in enumerate_undirected_graphs(order):
            result = rghv_colourability(g, k)
            assert result.agree, g
            if result.colourable:
                assert all(result.colouring[u] != result.colouring[v] for (u, v) in g.edges)
                assert result.orientation.longest_path_vertices() <= k


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4])
def test_rghv_sides_agree_on_order_six(k):
    for g in enumerate_undirected_graphs(6):
        assert rghv_colourability(g, k).agree, g


@pytest.mark.slow
def test_seven_cycle_colouring_through_orientations():
    for order in range(1, 7):
        for g in enumerate_undirected_graphs(order):
            if g.size > 9:
                continue
            hom = cycle_colourable(g, 7)
            orientation = cycle_colourable(g, 7, ColouringMethod.ORIENTATION)
            assert hom.colourable == orientation.colourable, g
            if orientation.colourable:
                assert is_cycle_hom(g, orientation.mapping, 7)
