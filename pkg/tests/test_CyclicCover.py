import random

import pytest

from cycleduality import (ContractViolationError, GraphValidationError, OrientedGraph, build_cyclic_cover,
                          cover_induced_hom, cover_violations, extract_no_certificate, make_ac_cycle,
                          make_directed_cycle, make_directed_path, make_q_path, q_pattern,
                          random_connected_oriented_graph)


def test_cover_of_ac5_is_the_identity():
    ac5 = make_ac_cycle(5)
    cover, selectors = build_cyclic_cover(ac5, 5)
    assert not cover.bipartition
    assert cover.m == 2
    assert cover.classes == (frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4}))
    assert cover.a(2) == frozenset({2})
    assert cover.d(1) == frozenset({4})
    assert selectors.l(0) == 4
    assert selectors.r(0) == 1
    assert selectors.p(1) == 0
    assert cover_violations(ac5, cover) == []
    assert cover_induced_hom(cover, ac5, 5).mapping == (0, 1, 2, 3, 4)


def test_directed_bipartition():
    g = OrientedGraph(4, [(0, 1), (2, 1), (2, 3)])
    cover, selectors = build_cyclic_cover(g, 7)
    assert cover.bipartition
    assert cover.a(0) == frozenset({0, 2})
    assert cover.a(1) == frozenset({1, 3})
    assert cover_violations(g, cover) == []
    assert cover_induced_hom(cover, g, 7).mapping == (0, 1, 0, 1)
    with pytest.raises(ContractViolationError):
        extract_no_certificate(g, cover, selectors, 7)


def test_q6_is_refuted_with_q6():
    q6 = make_q_path(6)
    cover, selectors = build_cyclic_cover(q6, 5)
    assert cover.a(0) == frozenset({1, 4})
    assert cover_induced_hom(cover, q6, 5) is None
    walk, l = extract_no_certificate(q6, cover, selectors, 5)
    assert l == 6
    assert walk.vertices == (0, 1, 2, 3, 4, 5)
    assert walk.directions == q_pattern(6)


def test_q8_is_refuted_with_q8():
    q8 = make_q_path(8)
    cover, selectors = build_cyclic_cover(q8, 7)
    walk, l = extract_no_certificate(q8, cover, selectors, 7)
    assert l == 8
    assert walk.vertices == tuple(range(8))


def test_arc_inside_a0_gives_q4():
    c3 = make_directed_cycle(3)
    cover, selectors = build_cyclic_cover(c3, 5)
    walk, l = extract_no_certificate(c3, cover, selectors, 5)
    assert l == 4
    assert walk.is_valid_in(c3)


def test_no_certificate_needs_a_violation():
    ac5 = make_ac_cycle(5)
    cover, selectors = build_cyclic_cover(ac5, 5)
    with pytest.raises(ContractViolationError):
        extract_no_certificate(ac5, cover, selectors, 5)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_cover_parameter(n):
    with pytest.raises(GraphValidationError):
        build_cyclic_cover(make_ac_cycle(5), n)


def test_cover_needs_connected_input():
    with pytest.raises(GraphValidationError):
        build_cyclic_cover(OrientedGraph(3, [(0, 1)]), 5)


def test_cover_must_match_graph():
    cover, _ = build_cyclic_cover(make_ac_cycle(5), 5)
    with pytest.raises(GraphValidationError):
        cover_induced_hom(cover, make_ac_cycle(5), 7)
    with pytest.raises(GraphValidationError):
        cover_induced_hom(cover, make_directed_path(3), 5)


def _check_random_covers(count, max_order, seed):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_connected_oriented_graph(rng.randint(1, max_order), rng, arc_probability=rng.random() * 0.3)
        for n in (5, 7, 9):
            cover, selectors = build_cyclic_cover(g, n)
            assert cover_violations(g, cover) == []
            if cover_induced_hom(cover, g, n) is None:
                walk, l = extract_no_certificate(g, cover, selectors, n)
                assert walk.is_valid_in(g)
                assert walk.directions == q_pattern(l)


def test_cover_properties_on_random_graphs():
    _check_random_covers(100, 30, seed=5)


@pytest.mark.slow
def test_cover_properties_on_many_random_graphs():
    _check_random_covers(1000, 30, seed=11)


@pytest.mark.parametrize("order", [10, 100, 1000])
def test_cover_steps_are_linear(order):
    rng = random.Random(order)
    g = random_connected_oriented_graph(order, rng, arc_probability=3.0 / order)
    cover, _ = build_cyclic_cover(g, 7)
    assert cover.steps <= 10 * (g.order + g.size)
