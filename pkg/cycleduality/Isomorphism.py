"""
Isomorphism.py
====================================
Canonical forms, isomorphism tests and exhaustive generation of small graphs up to isomorphism.

The canonical form is the smallest sorted arc code over the leaves of an individualisation-
refinement search (degrees first, then neighbour colours until stable). There is no automorphism
pruning beyond twin vertices, so this is meant for graphs with at most ten vertices.
"""
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, List, Sequence, Tuple, Union
import logging

import networkx as nx

from .Digraph import Digraph, OrientedGraph, UndirectedGraph
from .Errors import ResourceGuardError

logger = logging.getLogger(__name__)

DEFAULT_ISO_GUARD = 10
MAX_ENUMERATION_ORDER = 6
MAX_UNDIRECTED_ENUMERATION_ORDER = 7

Graph = Union[Digraph, UndirectedGraph]


def _adjacency(order: int, pairs, symmetric: bool):
    out_adj = [[] for _ in range(order)]
    in_adj = [[] for _ in range(order)]
    for (u, v) in pairs:
        out_adj[u].append(v)
        in_adj[v].append(u)
        if symmetric:
            out_adj[v].append(u)
            in_adj[u].append(v)
    return out_adj, in_adj


def _refine(order: int, out_adj, in_adj, signatures: list) -> List[int]:
    """
    Colour refinement. Colours are ranks of sorted signatures, so they only depend on the
    isomorphism class of the (coloured) graph.
    """
    while True:
        ranks = {s: i for i, s in enumerate(sorted(set(signatures)))}
        colour = [ranks[s] for s in signatures]
        refined = [(colour[v],
                    tuple(sorted(colour[w] for w in out_adj[v])),
                    tuple(sorted(colour[w] for w in in_adj[v]))) for v in range(order)]
        if len(set(refined)) == len(ranks):
            return colour
        signatures = refined


def _twins(u: int, w: int, out_adj, in_adj) -> bool:
    """true when swapping u and w is an automorphism"""
    if (w in out_adj[u]) != (u in out_adj[w]):
        return False
    return (set(out_adj[u]) - {w} == set(out_adj[w]) - {u} and
            set(in_adj[u]) - {w} == set(in_adj[w]) - {u})


def _canonical_code(order: int, pairs, symmetric: bool = False) -> Tuple[Tuple[int, int], ...]:
    """
    Individualisation-refinement: refine, pick the first cell with several vertices, individualise
    each of its vertices in turn (one per class of twins) and recurse. The smallest arc code
    over all discrete leaves is the canonical code.
    """
    pairs = list(pairs)
    out_adj, in_adj = _adjacency(order, pairs, symmetric)

    def code_of(label):
        if symmetric:
            return tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for (u, v) in pairs))
        return tuple(sorted((label[u], label[v]) for (u, v) in pairs))

    def search(signatures):
        colour = _refine(order, out_adj, in_adj, signatures)
        cells = {}
        for v in range(order):
            cells.setdefault(colour[v], []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            return code_of(colour)
        best = None
        tried = []
        for v in cells[target]:
            if any(_twins(v, w, out_adj, in_adj) for w in tried):
                continue
            tried.append(v)
            individualised = [2 * c + 1 for c in colour]
            individualised[v] = 2 * target
            code = search(individualised)
            if best is None or code < best:
                best = code
        return best

    if order == 0:
        return ()
    return search([(len(out_adj[v]), len(in_adj[v])) for v in range(order)])


def canonical_form(g: Graph, guard: int = DEFAULT_ISO_GUARD) -> tuple:
    """
    Returns a hashable form that is equal for two graphs exactly when they are isomorphic.

    :param g: a digraph or an undirected graph
    :param guard: largest order handled, None disables the guard
    :type guard: int
    :return: (kind, order, sorted arc code)
    :rtype: tuple
    :raises ResourceGuardError: if the order exceeds the guard
    """
    if guard is not None and g.order > guard:
        raise ResourceGuardError("canonical forms are limited to order {}, got {}".format(guard, g.order))
    if isinstance(g, UndirectedGraph):
        return "graph", g.order, _canonical_code(g.order, g.edges, symmetric=True)
    return "digraph", g.order, _canonical_code(g.order, g.arcs)


def canonical_graph(g: Graph, guard: int = DEFAULT_ISO_GUARD) -> Graph:
    """returns the isomorphic copy of g whose arcs are its canonical code"""
    _, order, code = canonical_form(g, guard)
    return type(g)(order, code)


def _degree_fingerprint(g: Graph):
    if isinstance(g, UndirectedGraph):
        return sorted(g.degree(v) for v in g.vertices())
    return sorted((g.out_degree(v), g.in_degree(v)) for v in g.vertices())


def isomorphic(g: Graph, h: Graph, guard: int = DEFAULT_ISO_GUARD) -> bool:
    """
    Exact isomorphism test by comparing canonical forms. Graphs of different kinds (directed
    versus undirected) are never isomorphic.
    """
    if isinstance(g, UndirectedGraph) != isinstance(h, UndirectedGraph):
        return False
    if g.order != h.order or g.size != h.size:
        return False
    if _degree_fingerprint(g) != _degree_fingerprint(h):
        return False
    return canonical_form(g, guard) == canonical_form(h, guard)


@lru_cache(maxsize=None)
def _oriented_codes(order: int) -> Tuple[tuple, ...]:
    if order == 1:
        return ((),)
    new = order - 1
    found = set()
    for base in _oriented_codes(order - 1):
        for relation in product((0, 1, 2), repeat=new):
            arcs = list(base)
            for u, r in enumerate(relation):
                if r == 1:
                    arcs.append((u, new))
                elif r == 2:
                    arcs.append((new, u))
            found.add(_canonical_code(order, arcs))
    logger.debug("{:,} oriented graphs of order {}".format(len(found), order))
    return tuple(sorted(found, key=lambda code: (len(code), code)))


@lru_cache(maxsize=None)
def _undirected_codes(order: int) -> Tuple[tuple, ...]:
    if order == 1:
        return ((),)
    new = order - 1
    found = set()
    for base in _undirected_codes(order - 1):
        for relation in product((0, 1), repeat=new):
            edges = list(base) + [(u, new) for u, r in enumerate(relation) if r]
            found.add(_canonical_code(order, edges, symmetric=True))
    logger.debug("{:,} graphs of order {}".format(len(found), order))
    return tuple(sorted(found, key=lambda code: (len(code), code)))


def enumerate_oriented_graphs(order: int, connected_only: bool = False) -> Iterator[OrientedGraph]:
    """
    Yields one representative of every isomorphism class of oriented graphs of the given order.

    Representatives of order k are obtained by adding a vertex to every representative of order
    k-1 in all 3^(k-1) possible ways and keeping one graph per canonical form. The stream is
    deterministic (ordered by number of arcs, then code).

    :param order: number of vertices, 1 <= order <= 6
    :type order: int
    :param connected_only: skip graphs that are not weakly connected
    :type connected_only: bool
    :raises ResourceGuardError: if order exceeds MAX_ENUMERATION_ORDER
    """
    if order < 1:
        raise ValueError("enumeration needs a positive order, got {}".format(order))
    if order > MAX_ENUMERATION_ORDER:
        raise ResourceGuardError("oriented graphs are only enumerated up to order {}, got {}".format(
            MAX_ENUMERATION_ORDER, order))
    for code in _oriented_codes(order):
        g = OrientedGraph(order, code)
        if connected_only and not nx.is_weakly_connected(g.network):
            continue
        yield g


def enumerate_undirected_graphs(order: int, connected_only: bool = False) -> Iterator[UndirectedGraph]:
    """
    Same as `enumerate_oriented_graphs` for simple undirected graphs, up to order 7.
    """
    if order < 1:
        raise ValueError("enumeration needs a positive order, got {}".format(order))
    if order > MAX_UNDIRECTED_ENUMERATION_ORDER:
        raise ResourceGuardError("graphs are only enumerated up to order {}, got {}".format(
            MAX_UNDIRECTED_ENUMERATION_ORDER, order))
    for code in _undirected_codes(order):
        g = UndirectedGraph(order, code)
        if connected_only and not nx.is_connected(g.network):
            continue
        yield g


def _pair_orbits(perm: Sequence[int], pairs) -> List[list]:
    seen = set()
    orbits = []
    for p in pairs:
        if p in seen:
            continue
        orbit = []
        q = p
        while q not in seen:
            seen.add(q)
            orbit.append(q)
            q = (perm[q[0]], perm[q[1]])
        orbits.append(orbit)
    return orbits


def count_oriented_graphs_burnside(order: int) -> int:
    """
    Counts oriented graphs of the given order up to isomorphism with Burnside's lemma over the
    symmetric group acting on ordered vertex pairs. Independent of the canonical form machinery.

    An orbit of ordered pairs that contains the reverse of its pairs must stay empty. All other
    orbits come in reverse pairs and each such pair has three choices (empty, one, the other).
    """
    pairs = [(u, v) for u in range(order) for v in range(order) if u != v]
    total = 0
    for perm in permutations(range(order)):
        free = 0
        for orbit in _pair_orbits(perm, pairs):
            u, v = orbit[0]
            if (v, u) not in orbit:
                free += 1
        total += 3 ** (free // 2)
    return total // factorial(order)


def count_undirected_graphs_burnside(order: int) -> int:
    """Burnside count of simple graphs up to isomorphism."""
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    total = 0
    for perm in permutations(range(order)):
        normalised = [tuple(sorted(p)) for p in pairs]
        seen = set()
        orbits = 0
        for p in normalised:
            if p in seen:
                continue
            orbits += 1
            q = p
            while q not in seen:
                seen.add(q)
                q = tuple(sorted((perm[q[0]], perm[q[1]])))
        total += 2 ** orbits
    return total // factorial(order)
