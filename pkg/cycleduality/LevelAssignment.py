"""
LevelAssignment.py
====================================
Levels and balance of digraphs.

A digraph is balanced when every cycle of its underlying graph has net length zero. Equivalently
each weak component admits a level function with level(v) = level(u) + 1 for every arc (u, v).
"""
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Union

import networkx as nx

from .Digraph import Digraph, UndirectedGraph
from .Errors import GraphValidationError


class LevelAssignment:
    """
    The normalised levels of a connected balanced digraph. The minimum level is 0 and the
    maximum level is the height.
    """

    def __init__(self, levels: Dict[int, int]):
        """Constructor method

        :param levels: vertex -> level, normalised such that the minimum is 0
        :type levels: dict
        """
        if levels and min(levels.values()) != 0:
            raise GraphValidationError("levels must be normalised to a minimum of 0")
        self._levels = dict(levels)

    @property
    def height(self) -> int:
        return max(self._levels.values()) if self._levels else 0

    def level(self, v: int) -> int:
        return self._levels[v]

    def as_tuple(self):
        """levels ordered by vertex id"""
        return tuple(self._levels[v] for v in sorted(self._levels))

    def items(self):
        return sorted(self._levels.items())

    def vertices_at(self, level: int) -> List[int]:
        return sorted(v for v, l in self._levels.items() if l == level)

    def __getitem__(self, v):
        return self._levels[v]

    def __len__(self):
        return len(self._levels)

    def __repr__(self):
        return "LevelAssignment(levels={}, height={})".format(self.as_tuple(), self.height)


def connected_components(g: Union[Digraph, UndirectedGraph]) -> List[FrozenSet[int]]:
    """
    returns the (weak) connected components ordered by their smallest vertex
    """
    if isinstance(g, UndirectedGraph):
        components = nx.connected_components(g.network)
    else:
        components = nx.weakly_connected_components(g.network)
    return sorted((frozenset(c) for c in components), key=min)


def _potential(g: Digraph, component) -> Optional[Dict[int, int]]:
    """
    propagates levels by BFS from the smallest vertex of `component`. Returns None as soon as an
    arc contradicts the levels found so far.
    """
    root = min(component)
    levels = {root: 0}
    queue = deque([root])
    network = g.network
    while queue:
        u = queue.popleft()
        for v in network.successors(u):
            if v not in levels:
                levels[v] = levels[u] + 1
                queue.append(v)
            elif levels[v] != levels[u] + 1:
                return None
        for v in network.predecessors(u):
            if v not in levels:
                levels[v] = levels[u] - 1
                queue.append(v)
            elif levels[v] != levels[u] - 1:
                return None
    return levels


def is_balanced(g: Digraph) -> bool:
    """
    true iff every cycle of the underlying graph has net length zero
    """
    return all(_potential(g, c) is not None for c in connected_components(g))


def levels(g: Digraph) -> LevelAssignment:
    """
    Computes the level assignment of a connected balanced digraph.

    :param g: a connected balanced digraph
    :type g: Digraph
    :return: normalised levels, the height is the maximum level
    :rtype: LevelAssignment
    :raises GraphValidationError: if g is empty, disconnected or unbalanced
    """
    components = connected_components(g)
    if len(components) != 1:
        raise GraphValidationError("levels need a connected digraph, found {} components".format(len(components)))
    raw = _potential(g, components[0])
    if raw is None:
        raise GraphValidationError("levels need a balanced digraph: some cycle has non-zero net length")
    low = min(raw.values())
    return LevelAssignment({v: l - low for v, l in raw.items()})


def component_levels(g: Digraph) -> Optional[List[LevelAssignment]]:
    """
    normalised levels of every weak component (ordered by smallest vertex), None if g is unbalanced
    """
    assignments = []
    for component in connected_components(g):
        raw = _potential(g, component)
        if raw is None:
            return None
        low = min(raw.values())
        assignments.append(LevelAssignment({v: l - low for v, l in raw.items()}))
    return assignments
