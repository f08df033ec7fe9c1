"""
DirectedPaths.py
====================================
The two classic dualities around directed paths.

* G maps to the directed path on k vertices iff G is balanced and every weak component has height
  at most k - 1 (the oriented paths mapping to G are the obstructions).
* G maps to the transitive tournament TT_k iff the directed path on k + 1 vertices does not map to
  G, i.e. iff G is acyclic and its longest directed path has at most k vertices.
"""
from typing import Dict, Optional
import logging

import networkx as nx

from .Digraph import Digraph
from .Families import make_directed_path, make_transitive_tournament
from .Homomorphism import Homomorphism
from .LevelAssignment import component_levels

logger = logging.getLogger(__name__)


def maps_to_directed_path(g: Digraph, k: int) -> Optional[Homomorphism]:
    """
    Maps g to the directed path 0 -> 1 -> ... -> k-1 by its levels, every component shifted to
    start at level 0.

    :param g: any digraph
    :type g: Digraph
    :param k: number of vertices of the directed path, at least 1
    :type k: int
    :return: the level homomorphism or None if g is unbalanced or too high
    :rtype: Homomorphism
    """
    if k < 1:
        raise ValueError("directed paths need at least one vertex, got {}".format(k))
    assignments = component_levels(g)
    if assignments is None:
        logger.debug("unbalanced digraph of order {:,}".format(g.order))
        return None
    if any(a.height > k - 1 for a in assignments):
        return None
    mapping = [0] * g.order
    for assignment in assignments:
        for v, level in assignment.items():
            mapping[v] = level
    return Homomorphism(g, make_directed_path(k), mapping)


def decide_tt(g: Digraph, k: int) -> Optional[Homomorphism]:
    """
    Maps every vertex of an acyclic g to the number of vertices before it on a longest directed
    path ending in it. That rank is a homomorphism into TT_k whenever it stays below k.

    :return: the rank homomorphism or None if g has a directed cycle or a directed path with more
        than k vertices
    :rtype: Homomorphism
    """
    if k < 1:
        raise ValueError("transitive tournaments need at least one vertex, got {}".format(k))
    network = g.network
    if not nx.is_directed_acyclic_graph(network):
        return None
    rank: Dict[int, int] = {}
    for v in nx.topological_sort(network):
        rank[v] = max((rank[u] + 1 for u in network.predecessors(v)), default=0)
    if rank and max(rank.values()) >= k:
        return None
    return Homomorphism(g, make_transitive_tournament(k), [rank[v] for v in g.vertices()])
