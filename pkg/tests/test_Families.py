import pytest

from cycleduality import (FamilyId, FamilyTag, GraphValidationError, Homomorphism, OrientedGraph, Pattern, exists_hom,
                          five_cycle_obstructions, hom_equivalent, is_b_cycle, is_minimal_path, isomorphic,
                          level_spread, make_ac_cycle, make_alternating_path, make_b_cycle, make_c4_prime, make_d5,
                          make_directed_cycle, make_directed_path, make_oriented_path, make_q_path,
                          make_transitive_tournament, make_undirected_cycle, q_pattern, random_oriented_tree,
                          recognize_family, tree_height)


def test_ac5_arc_set():
    assert make_ac_cycle(5).arcs == ((0, 1), (2, 1), (2, 3), (4, 0), (4, 3))


def test_ac3_is_the_transitive_tournament():
    assert isomorphic(make_ac_cycle(3), make_transitive_tournament(3))


def test_alternating_path():
    assert make_alternating_path(4).arcs == ((0, 1), (2, 1), (2, 3))
    assert make_alternating_path(1).size == 0


@pytest.mark.parametrize("n", [3, 4])
def test_short_q_paths_are_directed(n):
    assert make_q_path(n) == make_directed_path(n)


def test_q_patterns():
    assert str(q_pattern(6)) == "FFBFF"
    assert str(q_pattern(7)) == "FFBFBB"
    assert make_q_path(6).arcs == ((0, 1), (1, 2), (3, 2), (3, 4), (4, 5))


@pytest.mark.parametrize("n", range(3, 10))
def test_sizes(n):
    assert make_q_path(n).size == n - 1
    assert make_ac_cycle(n).size == n
    assert make_directed_cycle(n).size == n
    assert make_transitive_tournament(n).size == n * (n - 1) // 2
    assert make_undirected_cycle(n).size == n


@pytest.mark.parametrize("tag,n", [
    (FamilyTag.Q_PATH, 2),
    (FamilyTag.AC_CYCLE, 2),
    (FamilyTag.DIRECTED_CYCLE, 2),
    (FamilyTag.DIRECTED_PATH, 0),
])
def test_family_minimum_sizes(tag, n):
    with pytest.raises(GraphValidationError):
        FamilyId(tag, n)


def test_family_id_builds_and_prints():
    family = FamilyId(FamilyTag.AC_CYCLE, 5)
    assert str(family) == "accycle(5)"
    assert family.build() == make_ac_cycle(5)
    assert FamilyId(FamilyTag.UNDIRECTED_CYCLE, 4).build() == make_undirected_cycle(4)


def test_recognition_up_to_isomorphism():
    assert recognize_family(make_ac_cycle(5).relabeled([2, 4, 1, 0, 3])) == FamilyId(FamilyTag.AC_CYCLE, 5)
    assert recognize_family(make_q_path(7).relabeled(list(range(6, -1, -1)))) == FamilyId(FamilyTag.Q_PATH, 7)
    # the converse of Q_7 reads BBFBFF from either end
    assert recognize_family(make_q_path(7).converse()) is None
    assert recognize_family(make_transitive_tournament(4)) == FamilyId(FamilyTag.TRANSITIVE_TOURNAMENT, 4)
    assert recognize_family(make_directed_cycle(4)) == FamilyId(FamilyTag.DIRECTED_CYCLE, 4)
    assert recognize_family(make_undirected_cycle(5)) == FamilyId(FamilyTag.UNDIRECTED_CYCLE, 5)
    assert recognize_family(make_c4_prime()) is None


def test_recognition_prefers_earlier_families():
    assert recognize_family(make_q_path(4)) == FamilyId(FamilyTag.DIRECTED_PATH, 4)
    assert recognize_family(make_transitive_tournament(3)) == FamilyId(FamilyTag.AC_CYCLE, 3)


def test_recognition_beyond_the_guard():
    assert recognize_family(make_ac_cycle(13)) == FamilyId(FamilyTag.AC_CYCLE, 13)


def test_minimal_paths():
    assert is_minimal_path(make_directed_path(4))
    assert is_minimal_path(make_q_path(6))
    assert not is_minimal_path(make_oriented_path(Pattern.from_string("FBF")))
    with pytest.raises(GraphValidationError):
        is_minimal_path(make_directed_cycle(3))


def test_b_cycles():
    assert is_b_cycle(make_transitive_tournament(3))
    five = OrientedGraph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)])
    assert is_b_cycle(five)
    assert not is_b_cycle(make_directed_cycle(3))
    assert not is_b_cycle(make_directed_cycle(4))
    # AC_4 has no directed two-arc path, the complement of a_4 -> a_0 -> a_1 in AC_5 is not minimal
    assert not is_b_cycle(make_ac_cycle(4))
    assert not is_b_cycle(make_ac_cycle(5))
    assert is_b_cycle(make_ac_cycle(3))


def test_make_b_cycle():
    assert make_b_cycle(2, Pattern.from_string("F")) == make_transitive_tournament(3)
    five = make_b_cycle(3, Pattern.from_string("FF"))
    assert five.arcs == ((0, 1), (0, 4), (1, 2), (2, 3), (4, 3))
    assert is_b_cycle(five)
    assert is_b_cycle(make_b_cycle(4, q_pattern(6)))
    with pytest.raises(GraphValidationError):
        make_b_cycle(3, Pattern.from_string("FBF"))
    with pytest.raises(GraphValidationError):
        make_b_cycle(2, Pattern.from_string("FBF"))


def test_five_cycle_obstructions():
    inventory = five_cycle_obstructions()
    assert len(inventory) == 8
    for i in range(8):
        for j in range(i + 1, 8):
            assert not isomorphic(inventory[i], inventory[j])
    assert inventory[4].arcs == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert make_d5().arcs == ((0, 1), (0, 4), (1, 2), (3, 2), (3, 4), (4, 5))


@pytest.mark.parametrize("n", range(5, 13))
def test_q_path_maps_two_shorter(n):
    assert exists_hom(make_q_path(n), make_q_path(n - 2)) is not None


@pytest.mark.parametrize("n", range(6, 13, 2))
def test_even_q_path_folds_q3_onto_q1_and_q4_onto_q2(n):
    mapping = [v if v < 3 else v - 2 for v in range(n)]
    hom = Homomorphism(make_q_path(n), make_q_path(n - 2), mapping)
    assert hom.is_surjective()


@pytest.mark.parametrize("n", range(4, 10))
def test_q_path_does_not_map_to_ac_cycle_below(n):
    assert exists_hom(make_q_path(n + 1), make_ac_cycle(n)) is None


@pytest.mark.parametrize("n", range(4, 13))
def test_q_paths_fold_onto_the_three_vertex_path_iff_odd(n):
    assert hom_equivalent(make_q_path(n), make_directed_path(3)) == (n % 2 == 1)
    assert level_spread(make_q_path(n)) + 1 == (3 if n % 2 == 1 else 4)


@pytest.mark.parametrize("n", range(3, 13))
def test_ac_cycles_fold_onto_an_arc_iff_even(n):
    assert hom_equivalent(make_ac_cycle(n), make_directed_path(2)) == (n % 2 == 0)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_height_three_paths_lie_between_p3_and_p4(n):
    q = make_q_path(n)
    assert exists_hom(make_directed_path(3), q) is not None
    assert exists_hom(q, make_directed_path(4)) is not None


def test_random_height_three_trees_lie_between_p3_and_p4():
    trees = [random_oriented_tree(4 + seed % 6, height_cap=3, seed=seed) for seed in range(60)]
    tall = [t for t in trees if tree_height(t) == 3]
    assert tall
    for t in tall:
        assert exists_hom(make_directed_path(3), t) is not None
        assert exists_hom(t, make_directed_path(4)) is not None
        assert exists_hom(t, make_directed_path(3)) is None
        assert exists_hom(make_directed_path(5), t) is None
