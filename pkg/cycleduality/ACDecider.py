"""
ACDecider.py
====================================
Certifying decision procedure for "does G map to AC_n".

Dispatch:

* a symmetric pair u, v: the walk u, v, u, ... follows every pattern, so G does not map to any
  oriented graph
* even n: AC_n is homomorphically equivalent to a single arc, G -> AC_n iff G has no directed
  walk with two arcs
* n = 3: AC_3 is the transitive tournament on 3 vertices, G -> AC_3 iff G has no directed walk
  with three arcs
* odd n >= 5: the n-cyclic cover of every weak component
"""
from typing import Dict, List
import logging

import networkx as nx

from .CyclicCover import build_cyclic_cover, cover_induced_hom, extract_no_certificate
from .Certificate import Certificate, Verdict
from .Digraph import Digraph, OrientedGraph
from .Families import q_pattern
from .LevelAssignment import connected_components
from .SemiWalk import Pattern, SemiWalk, find_pattern_walk

logger = logging.getLogger(__name__)

# TT_3 positions of a_2 < a_0 < a_1 in AC_3
_AC3_BY_RANK = (2, 0, 1)


def _symmetric_pair_certificate(g: Digraph, n: int) -> Certificate:
    u, v = g.symmetric_pairs()[0]
    l = 4 if n % 2 == 1 else n + 1
    vertices = [u if i % 2 == 0 else v for i in range(l)]
    logger.debug("symmetric pair ({}, {}) refutes AC_{}".format(u, v, n))
    return Certificate(Verdict.NO, n, walk=SemiWalk(vertices, q_pattern(l)), l=l)


def _decide_even(g: Digraph, n: int) -> Certificate:
    walk = find_pattern_walk(g, Pattern.from_string("FF"))
    if walk is None:
        # no vertex has both in- and out-neighbours: sources (and isolated vertices) to a_0, sinks to a_1
        mapping = [1 if g.in_degree(v) > 0 else 0 for v in g.vertices()]
        return Certificate(Verdict.YES, n, mapping=mapping)
    base = walk.vertices
    l = n + 1
    pattern = q_pattern(l)
    # Q_l with l odd folds onto the directed path on three vertices level by level
    vertices = [base[level] for level in pattern.cumulative_levels()]
    return Certificate(Verdict.NO, n, walk=SemiWalk(vertices, pattern), l=l)


def _decide_three(g: Digraph) -> Certificate:
    walk = find_pattern_walk(g, q_pattern(4))
    if walk is not None:
        return Certificate(Verdict.NO, 3, walk=walk, l=4)
    network = g.network
    rank: Dict[int, int] = {}
    for v in nx.topological_sort(network):
        rank[v] = max((rank[u] + 1 for u in network.predecessors(v)), default=0)
    mapping = [_AC3_BY_RANK[rank[v]] for v in g.vertices()]
    return Certificate(Verdict.YES, 3, mapping=mapping)


def _decide_by_covers(g: Digraph, n: int) -> Certificate:
    mapping: List[int] = [0] * g.order
    covers = []
    for component in connected_components(g):
        sub = OrientedGraph.from_digraph(g.induced_subgraph(component))
        names = sorted(component)
        cover, selectors = build_cyclic_cover(sub, n)
        hom = cover_induced_hom(cover, sub, n)
        if hom is None:
            walk, l = extract_no_certificate(sub, cover, selectors, n)
            logger.debug("component of {} refuted with Q_{}".format(names[0], l))
            return Certificate(Verdict.NO, n, walk=walk.relabeled(names), l=l)
        for v, x in enumerate(hom.mapping):
            mapping[names[v]] = x
        covers.append(cover)
    return Certificate(Verdict.YES, n, mapping=mapping, covers=tuple(covers))


def decide_ac(g: Digraph, n: int) -> Certificate:
    """
    Decides whether g maps to AC_n and returns the certificate of the answer.

    :param g: any digraph, disconnected graphs are decided per weak component
    :type g: Digraph
    :param n: at least 3
    :type n: int
    :return: a yes-certificate with a total mapping into AC_n or a no-certificate with a walk
        following the pattern of Q_l
    :rtype: Certificate
    :raises ValueError: if n < 3
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError("AC_n needs n >= 3, got {!r}".format(n))
    if not g.is_oriented():
        return _symmetric_pair_certificate(g, n)
    if n % 2 == 0:
        cert = _decide_even(g, n)
    elif n == 3:
        cert = _decide_three(g)
    else:
        cert = _decide_by_covers(g, n)
    logger.debug("G of order {:,} -> AC_{}: {}".format(g.order, n, cert.verdict.value))
    return cert
