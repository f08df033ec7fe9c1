"""
TreeDuals.py
====================================
Duals of oriented trees of height at most 3 and a seeded random tree generator.

Height 1 trees are dual to TT_1, height 2 trees to TT_2. The core of a tree of height 3 is a
path Q_k with k even, and (Q_k, AC_{k-1}) is a duality pair, so AC_{k-1} is returned.
"""
from typing import Optional
import logging
import random

import networkx as nx

from .Digraph import Digraph, OrientedGraph
from .Errors import ContractViolationError, GraphValidationError
from .Families import make_ac_cycle, make_q_path, make_transitive_tournament
from .Homomorphism import DEFAULT_CORE_GUARD, core_of
from .Isomorphism import isomorphic
from .LevelAssignment import levels

logger = logging.getLogger(__name__)


def _check_tree(t: Digraph):
    if t.order == 0 or t.size != t.order - 1 or not nx.is_weakly_connected(t.network):
        raise GraphValidationError("not a tree: a connected graph with one arc less than vertices is needed")
    if not t.is_oriented():
        raise GraphValidationError("not an oriented tree: symmetric pair {}".format(t.symmetric_pairs()[0]))


def tree_height(t: Digraph) -> int:
    """
    :param t: a connected oriented tree
    :type t: Digraph
    :return: the maximum level of its normalised level assignment
    :rtype: int
    :raises GraphValidationError: if t is not an oriented tree
    """
    _check_tree(t)
    return levels(t).height


def tree_dual(t: Digraph, core_guard: Optional[int] = DEFAULT_CORE_GUARD) -> OrientedGraph:
    """
    Returns a dual of the oriented tree t of height 1, 2 or 3. The dual has fewer vertices than
    the core of t.

    :raises GraphValidationError: for height 0 or a height above 3
    :raises ContractViolationError: if the core of a height 3 tree is not an even Q path
    """
    h = tree_height(t)
    if h == 0:
        raise GraphValidationError("trees of height 0 have no dual")
    if h > 3:
        raise GraphValidationError("duals are only built for trees of height at most 3, got {}".format(h))
    if h < 3:
        return make_transitive_tournament(h)
    core = core_of(t, guard=core_guard)
    k = core.order
    if k % 2 == 1 or k < 4 or not isomorphic(core, make_q_path(k)):
        raise ContractViolationError("core of a height 3 tree is not an even Q path: {}".format(core))
    logger.debug("tree of order {} has core Q_{}".format(t.order, k))
    return make_ac_cycle(k - 1)


def random_oriented_tree(order: int, height_cap: Optional[int] = None, seed: int = 0) -> OrientedGraph:
    """
    Attaches every vertex v >= 1 to a uniformly chosen earlier vertex with a random direction.
    When the direction would push the height beyond height_cap it is flipped, which always stays
    within the cap for height_cap >= 1. Deterministic per seed.

    :param order: number of vertices, at least 1
    :type order: int
    :param height_cap: largest allowed height, None for no cap
    :type height_cap: int
    :param seed: seed of the private random generator
    :type seed: int
    """
    if order < 1:
        raise ValueError("order must be positive, got {}".format(order))
    if height_cap is not None and height_cap < 1 and order > 1:
        raise ValueError("trees with arcs have height at least 1, got cap {}".format(height_cap))
    rng = random.Random(seed)
    level = [0]
    arcs = []
    for v in range(1, order):
        u = rng.randrange(v)
        outward = rng.random() < 0.5
        candidate = level[u] + (1 if outward else -1)
        if height_cap is not None:
            low, high = min(level + [candidate]), max(level + [candidate])
            if high - low > height_cap:
                outward = not outward
                candidate = level[u] + (1 if outward else -1)
        level.append(candidate)
        arcs.append((u, v) if outward else (v, u))
    return OrientedGraph(order, arcs)
