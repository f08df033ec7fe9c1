import random

import pytest
from hypothesis import given, settings, strategies as st

from cycleduality import (OrientedGraph, ResourceGuardError, UndirectedGraph, canonical_form,
                          count_oriented_graphs_burnside, enumerate_oriented_graphs, enumerate_undirected_graphs,
                          isomorphic, make_ac_cycle, make_d5, make_q_path, make_transitive_tournament,
                          make_undirected_cycle)
from cycleduality.Isomorphism import canonical_graph, count_undirected_graphs_burnside

from strategies import oriented_graphs

ORIENTED_COUNTS = [1, 2, 7, 42, 582, 21480]
CONNECTED_ORIENTED_COUNTS = [1, 1, 5, 34, 535]
UNDIRECTED_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_oriented_graph_counts(order):
    assert len(list(enumerate_oriented_graphs(order))) == ORIENTED_COUNTS[order - 1]


@pytest.mark.slow
def test_oriented_graph_count_order_six():
    assert len(list(enumerate_oriented_graphs(6))) == ORIENTED_COUNTS[5]


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_connected_oriented_graph_counts(order):
    assert len(list(enumerate_oriented_graphs(order, connected_only=True))) == CONNECTED_ORIENTED_COUNTS[order - 1]


def test_connected_counts_match_inverse_euler_transform():
    # every oriented graph is a multiset of connected ones
    totals = [1] + ORIENTED_COUNTS[:5]
    connected = [0]
    for n in range(1, 6):
        # n a(n) = sum_{k=1..n} c(k) a(n-k) with c(k) = sum_{d | k} d b(d), b(n) unknown
        def c(k, largest):
            return sum(d * connected[d] for d in range(1, largest + 1) if k % d == 0)
        rest = sum(c(k, k) * totals[n - k] for k in range(1, n)) + c(n, n - 1)
        connected.append((n * totals[n] - rest) // n)
    assert connected[1:] == CONNECTED_ORIENTED_COUNTS


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6])
def test_burnside_counts(order):
    assert count_oriented_graphs_burnside(order) == ORIENTED_COUNTS[order - 1]
    assert count_undirected_graphs_burnside(order) == UNDIRECTED_COUNTS[order - 1]


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6])
def test_undirected_graph_counts(order):
    assert len(list(enumerate_undirected_graphs(order))) == UNDIRECTED_COUNTS[order - 1]


@pytest.mark.slow
def test_undirected_graph_count_order_seven():
    assert len(list(enumerate_undirected_graphs(7))) == UNDIRECTED_COUNTS[6]


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_oriented_graphs(0))
    with pytest.raises(ResourceGuardError):
        list(enumerate_oriented_graphs(7))
    with pytest.raises(ResourceGuardError):
        list(enumerate_undirected_graphs(8))


def test_enumeration_is_deterministic_and_duplicate_free():
    first = list(enumerate_oriented_graphs(4))
    assert first == list(enumerate_oriented_graphs(4))
    assert len({canonical_form(g) for g in first}) == len(first)
    assert first[0].size == 0


def test_canonical_form_ignores_labels():
    ac5 = make_ac_cycle(5)
    assert canonical_form(ac5.relabeled([3, 0, 4, 1, 2])) == canonical_form(ac5)
    assert canonical_graph(ac5) == canonical_graph(ac5.relabeled([4, 3, 2, 1, 0]))


def test_isomorphism_examples():
    assert isomorphic(make_ac_cycle(3), make_transitive_tournament(3))
    assert isomorphic(make_q_path(6).converse(), make_q_path(6))
    assert not isomorphic(make_d5(), make_d5(reverse=True))
    assert make_d5().converse().relabeled([5, 4, 3, 2, 1, 0]) == make_d5(reverse=True)
    assert not isomorphic(make_undirected_cycle(3), make_transitive_tournament(3))


def test_symmetric_graphs_are_handled():
    # vertex transitive inputs stress the refinement
    cube = UndirectedGraph(8, [(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4),
                               (0, 4), (1, 5), (2, 6), (3, 7)])
    rng = random.Random(3)
    perm = list(range(8))
    rng.shuffle(perm)
    assert isomorphic(cube, cube.relabeled(perm))
    assert not isomorphic(cube, make_undirected_cycle(8))


def test_canonical_form_guard():
    with pytest.raises(ResourceGuardError):
        canonical_form(OrientedGraph(11))
    assert canonical_form(OrientedGraph(11), guard=None) == ("digraph", 11, ())


@settings(max_examples=50, deadline=None)
@given(g=oriented_graphs(max_order=6), seed=st.integers(min_value=0, max_value=10 ** 6))
def test_canonical_form_is_invariant(g, seed):
    perm = list(range(g.order))
    random.Random(seed).shuffle(perm)
    h = g.relabeled(perm)
    assert canonical_form(g) == canonical_form(h)
    assert isomorphic(g, h)
