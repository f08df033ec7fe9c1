import pytest

from cycleduality import (GraphValidationError, OrientedGraph, check_duality_pair, core_of, make_ac_cycle,
                          make_directed_cycle, make_directed_path, make_q_path, make_transitive_tournament,
                          random_oriented_tree, tree_dual, tree_height)


def test_heights():
    assert tree_height(OrientedGraph(1)) == 0
    assert tree_height(make_directed_path(2)) == 1
    assert tree_height(make_q_path(6)) == 3
    assert tree_height(make_q_path(8)) == 3


def test_named_duals():
    assert tree_dual(make_directed_path(2)) == make_transitive_tournament(1)
    assert tree_dual(OrientedGraph(3, [(0, 1), (2, 1)])) == make_transitive_tournament(1)
    assert tree_dual(make_directed_path(3)) == make_transitive_tournament(2)
    assert tree_dual(make_q_path(6)) == make_ac_cycle(5)
    assert tree_dual(make_q_path(8)) == make_ac_cycle(7)
    assert tree_dual(make_directed_path(4)) == make_ac_cycle(3)


def test_rejected_trees():
    with pytest.raises(GraphValidationError):
        tree_dual(OrientedGraph(1))
    with pytest.raises(GraphValidationError):
        tree_dual(make_directed_path(5))
    with pytest.raises(GraphValidationError):
        tree_dual(make_directed_cycle(3))
    with pytest.raises(GraphValidationError):
        tree_dual(OrientedGraph(4, [(0, 1), (2, 3)]))


def test_random_trees_are_seeded_and_capped():
    assert random_oriented_tree(9, 3, seed=4) == random_oriented_tree(9, 3, seed=4)
    for seed in range(30):
        t = random_oriented_tree(10, 3, seed=seed)
        assert t.size == 9
        assert tree_height(t) <= 3
    with pytest.raises(ValueError):
        random_oriented_tree(0)
    with pytest.raises(ValueError):
        random_oriented_tree(3, 0)


@pytest.mark.parametrize("seed", range(8))
def test_random_tree_duals(seed):
    t = random_oriented_tree(3 + seed % 5, 3, seed=seed)
    dual = tree_dual(t)
    assert dual.order < core_of(t).order
    assert check_duality_pair(t, dual, 4).holds


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(8, 50))
def test_more_random_tree_duals(seed):
    t = random_oriented_tree(5 + seed % 5, 3, seed=seed)
    assert check_duality_pair(t, tree_dual(t), 4).holds
