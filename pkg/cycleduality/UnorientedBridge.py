"""
UnorientedBridge.py
====================================
The undirected side: cycle colourability through orientations that avoid a forbidden set.

A graph G maps to the cycle C_k (k odd) iff it has an orientation that maps to AC_k, i.e. an
orientation in which no semi-walk follows the pattern of Q_{k+1}, i.e. an orientation without
a homomorphic image of Q_{k+1}. This module searches such orientations and cross-checks them
with the undirected homomorphism oracle. The Roy-Gallai-Hasse-Vitaver check compares proper
k-colourings (solved with CP-SAT) with orientations whose directed paths have at most k vertices.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple, Union
import logging

import networkx as nx
from networkx.algorithms import isomorphism
from ortools.sat.python import cp_model

from .ACDecider import decide_ac
from .Digraph import Digraph, OrientedGraph, UndirectedGraph
from .Errors import ContractViolationError, GraphValidationError, ResourceGuardError
from .Families import (five_cycle_obstructions, make_directed_cycle, make_q_path, make_undirected_cycle,
                       q_pattern)
from .Homomorphism import DEFAULT_HOM_GUARD, exists_hom
from .ImageSet import surjective_images
from .Isomorphism import canonical_form, isomorphic
from .SemiWalk import Pattern, find_pattern_walk

logger = logging.getLogger(__name__)

DEFAULT_EDGE_LIMIT = 20
DEFAULT_RGHV_GUARD = 10
MAX_FORBIDDEN_ORDER = 8


class ContainmentMode(Enum):
    SUBGRAPH = 'subgraph'
    INDUCED = 'induced'


class ColouringMethod(Enum):
    HOM = 'hom'
    ORIENTATION = 'orientation'
    PATTERN = 'pattern'


class Orientation:
    """
    One arc per edge of the host graph.
    """

    def __init__(self, host: UndirectedGraph, arcs):
        """Constructor method

        :param host: the undirected graph being oriented
        :type host: UndirectedGraph
        :param arcs: exactly one of (u, v), (v, u) for every edge {u, v} of the host
        :type arcs: iterable of tuple(int, int)
        """
        arcs = tuple(sorted(arcs))
        underlying = sorted((min(u, v), max(u, v)) for (u, v) in arcs)
        if underlying != list(host.edges):
            raise GraphValidationError("an orientation needs exactly one arc per host edge")
        self._host = host
        self._arcs = arcs
        self._digraph = OrientedGraph(host.order, arcs)

    @classmethod
    def from_oriented_graph(cls, g: Digraph) -> "Orientation":
        return cls(g.underlying_graph(), g.arcs)

    @property
    def host(self) -> UndirectedGraph:
        return self._host

    @property
    def arcs(self) -> Tuple[Tuple[int, int], ...]:
        return self._arcs

    @property
    def oriented_graph(self) -> OrientedGraph:
        return self._digraph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self._digraph.network)

    def longest_path_vertices(self) -> int:
        """number of vertices on a longest directed path, only for acyclic orientations"""
        if self._host.order == 0:
            return 0
        return nx.dag_longest_path_length(self._digraph.network) + 1

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._host == other._host and self._arcs == other._arcs

    def __hash__(self):
        return hash(self._arcs)

    def __repr__(self):
        return "Orientation(arcs={})".format(list(self._arcs))


@lru_cache(maxsize=None)
def _image_members(n: int) -> Tuple[OrientedGraph, ...]:
    return surjective_images(make_q_path(n), n=n).members


class ForbiddenSet:
    """
    Pairwise non-isomorphic oriented graphs that an orientation must avoid, either as subgraphs
    or as induced subgraphs, possibly together with the requirement to be acyclic.
    """

    def __init__(self, members: Sequence[OrientedGraph], mode: ContainmentMode = ContainmentMode.SUBGRAPH,
                 acyclic_required: bool = False):
        members = tuple(members)
        keys = set()
        for member in members:
            if member.order > MAX_FORBIDDEN_ORDER:
                raise ResourceGuardError("forbidden graphs are limited to order {}, got {}".format(
                    MAX_FORBIDDEN_ORDER, member.order))
            key = canonical_form(member)
            if key in keys:
                raise GraphValidationError("forbidden set members must be pairwise non-isomorphic")
            keys.add(key)
        self._members = members
        self._mode = mode
        self._acyclic_required = acyclic_required

    @classmethod
    def from_images(cls, n: int, mode: ContainmentMode = ContainmentMode.SUBGRAPH,
                    acyclic_required: bool = False) -> "ForbiddenSet":
        """F_n: the surjective homomorphic images of Q_n (generated once per n)"""
        return cls(_image_members(n), mode, acyclic_required)

    @classmethod
    def five_cycle(cls, mode: ContainmentMode = ContainmentMode.SUBGRAPH) -> "ForbiddenSet":
        """C_3, TT_3, P_4, C_4, C'_4, Q_6, D_5 and the converse of D_5"""
        return cls(five_cycle_obstructions(), mode)

    @classmethod
    def five_cycle_acyclic(cls, mode: ContainmentMode = ContainmentMode.SUBGRAPH) -> "ForbiddenSet":
        """the five cycle obstructions without the directed cycles, for acyclic orientations"""
        return cls(five_cycle_obstructions(), mode).without([make_directed_cycle(3), make_directed_cycle(4)],
                                                              acyclic_required=True)

    def without(self, graphs: Sequence[Digraph], acyclic_required: Optional[bool] = None) -> "ForbiddenSet":
        kept = [m for m in self._members if not any(isomorphic(m, g) for g in graphs)]
        if acyclic_required is None:
            acyclic_required = self._acyclic_required
        return ForbiddenSet(kept, self._mode, acyclic_required)

    @property
    def members(self) -> Tuple[OrientedGraph, ...]:
        return self._members

    @property
    def mode(self) -> ContainmentMode:
        return self._mode

    @property
    def acyclic_required(self) -> bool:
        return self._acyclic_required

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __repr__(self):
        return "ForbiddenSet(members={}, mode={}, acyclic_required={})".format(
            len(self._members), self._mode.value, self._acyclic_required)


@dataclass(frozen=True)
class ForbiddenWitness:
    """member `member_index` of the forbidden set sits on the vertices embedding[0], embedding[1], ..."""
    member_index: int
    embedding: Tuple[int, ...]


def _embedding(host: nx.DiGraph, member: Digraph, mode: ContainmentMode) -> Optional[dict]:
    matcher = isomorphism.DiGraphMatcher(host, member.network)
    if mode is ContainmentMode.INDUCED:
        return next(matcher.subgraph_isomorphisms_iter(), None)
    return next(matcher.subgraph_monomorphisms_iter(), None)


def contains_forbidden(o: Union[Orientation, Digraph], f: ForbiddenSet) -> Optional[ForbiddenWitness]:
    """
    Searches the members of f, in order, inside the oriented graph of o.

    :return: the first member found and where it sits, or None
    :rtype: ForbiddenWitness
    """
    digraph = o.oriented_graph if isinstance(o, Orientation) else o
    for i, member in enumerate(f.members):
        mapping = _embedding(digraph.network, member, f.mode)
        if mapping is not None:
            inverse = {m: h for h, m in mapping.items()}
            return ForbiddenWitness(i, tuple(inverse[v] for v in range(member.order)))
    return None


def _edge_order(g: UndirectedGraph) -> List[Tuple[int, int]]:
    """edges in BFS order, every component started from its vertex of highest degree"""
    order = []
    seen_edges = set()
    visited = set()
    for start in sorted(g.vertices(), key=lambda v: (-g.degree(v), v)):
        if start in visited:
            continue
        visited.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                edge = (min(u, w), max(u, w))
                if edge not in seen_edges:
                    seen_edges.add(edge)
                    order.append(edge)
                if w not in visited:
                    visited.add(w)
                    queue.append(w)
    return order


Prune = Callable[[nx.DiGraph, Tuple[int, int], List[int]], bool]


def search_orientations(g: UndirectedGraph, prune: Prune, edge_limit: int = DEFAULT_EDGE_LIMIT) -> Optional[Orientation]:
    """
    Depth first search over orientations. Edges are fixed in BFS order, each first as (u, v) with
    u < v and then reversed. After every step `prune(partial, arc, unoriented)` is asked whether
    the partial orientation can be abandoned, where `unoriented[v]` counts the edges at v not
    oriented yet. The first complete orientation that is never pruned is returned.

    :raises ResourceGuardError: if g has more than edge_limit edges
    """
    if edge_limit is not None and g.size > edge_limit:
        raise ResourceGuardError("orientation search is limited to {} edges, got {}".format(edge_limit, g.size))
    edges = _edge_order(g)
    partial = nx.DiGraph()
    partial.add_nodes_from(g.vertices())
    unoriented = [g.degree(v) for v in g.vertices()]
    visited = [0]

    def extend(i: int) -> Optional[Orientation]:
        if i == len(edges):
            return Orientation(g, partial.edges())
        u, v = edges[i]
        for arc in ((u, v), (v, u)):
            partial.add_edge(*arc)
            unoriented[u] -= 1
            unoriented[v] -= 1
            visited[0] += 1
            if not prune(partial, arc, unoriented):
                found = extend(i + 1)
                if found is not None:
                    return found
            partial.remove_edge(*arc)
            unoriented[u] += 1
            unoriented[v] += 1
        return None

    found = extend(0)
    logger.debug("orientation search visited {:,} partial orientations".format(visited[0]))
    return found


def _closes_cycle(partial: nx.DiGraph, arc: Tuple[int, int]) -> bool:
    return nx.has_path(partial, arc[1], arc[0])


def _forbidden_pruner(f: ForbiddenSet) -> Prune:
    def prune(partial, arc, unoriented):
        if f.acyclic_required and _closes_cycle(partial, arc):
            return True
        if f.mode is ContainmentMode.INDUCED:
            # only vertices with all their edges oriented have a final induced subgraph
            complete = [v for v in partial.nodes if unoriented[v] == 0]
            host = partial.subgraph(complete)
        else:
            host = partial
        return any(_embedding(host, member, f.mode) is not None for member in f.members)
    return prune


def _pattern_pruner(pattern: Pattern) -> Prune:
    def prune(partial, arc, unoriented):
        return find_pattern_walk(Digraph(partial.number_of_nodes(), partial.edges()), pattern) is not None
    return prune


def _path_length_pruner(k: int) -> Prune:
    def prune(partial, arc, unoriented):
        if _closes_cycle(partial, arc):
            return True
        return nx.dag_longest_path_length(partial) + 1 > k
    return prune


def find_f_free_orientation(g: UndirectedGraph, f: ForbiddenSet,
                            edge_limit: int = DEFAULT_EDGE_LIMIT) -> Optional[Orientation]:
    """
    Returns an orientation of g containing no member of f (under f's containment mode, acyclic if
    f requires it), or None once the whole space is exhausted.

    :raises ResourceGuardError: if g has more than edge_limit edges
    """
    return search_orientations(g, _forbidden_pruner(f), edge_limit)


def undirected_hom(g: UndirectedGraph, h: UndirectedGraph,
                   guard: Optional[int] = DEFAULT_HOM_GUARD) -> Optional[Tuple[int, ...]]:
    """
    Edge preserving map g -> h, found by the digraph oracle on the symmetric versions of both.

    :return: mapping[v] is the image of v, or None
    """
    hom = exists_hom(g.as_symmetric_digraph(), h.as_symmetric_digraph(), guard)
    return hom.mapping if hom is not None else None


@dataclass(frozen=True)
class ColouringResult:
    """
    `mapping` is a homomorphism to the cycle when `colourable`. The orientation and pattern
    methods also return the orientation the mapping was read from.
    """
    colourable: bool
    mapping: Optional[Tuple[int, ...]] = None
    orientation: Optional[Orientation] = None


def _mapping_from_orientation(o: Orientation, cycle_order: int) -> Tuple[int, ...]:
    # AC_k has the cycle 0, 1, ..., k-1 as underlying graph
    cert = decide_ac(o.oriented_graph, cycle_order)
    if not cert.is_yes:
        raise ContractViolationError("orientation {} does not map to AC_{}".format(o, cycle_order))
    return cert.mapping


def cycle_colourable(g: UndirectedGraph, cycle_order: int, method: ColouringMethod = ColouringMethod.HOM,
                     hom_guard: Optional[int] = DEFAULT_HOM_GUARD,
                     edge_limit: int = DEFAULT_EDGE_LIMIT) -> ColouringResult:
    """
    Decides whether g maps to the cycle on cycle_order vertices.

    * hom: the undirected homomorphism oracle
    * orientation: an orientation free of the images of Q_{cycle_order+1}
    * pattern: an orientation without a semi-walk following the pattern of Q_{cycle_order+1}

    Even cycles are decided by bipartiteness for every method.

    :raises ValueError: if cycle_order < 3
    """
    if cycle_order < 3:
        raise ValueError("cycles need at least 3 vertices, got {}".format(cycle_order))
    method = ColouringMethod(method)
    if cycle_order % 2 == 0:
        if not nx.is_bipartite(g.network):
            return ColouringResult(False)
        side = nx.bipartite.color(g.network)
        return ColouringResult(True, tuple(side[v] for v in g.vertices()))
    if method is ColouringMethod.HOM:
        mapping = undirected_hom(g, make_undirected_cycle(cycle_order), hom_guard)
        return ColouringResult(mapping is not None, mapping)
    if method is ColouringMethod.ORIENTATION:
        o = find_f_free_orientation(g, ForbiddenSet.from_images(cycle_order + 1), edge_limit)
    else:
        o = search_orientations(g, _pattern_pruner(q_pattern(cycle_order + 1)), edge_limit)
    if o is None:
        return ColouringResult(False)
    return ColouringResult(True, _mapping_from_orientation(o, cycle_order), o)


@dataclass(frozen=True)
class FiveCycleStatements:
    """
    The four equivalent descriptions of 5-cycle colourable graphs evaluated independently.
    """
    hom: bool
    pattern_free: bool
    forbidden_free: bool
    acyclic_forbidden_free: bool

    @property
    def agree(self) -> bool:
        return len({self.hom, self.pattern_free, self.forbidden_free, self.acyclic_forbidden_free}) == 1


def five_cycle_statements(g: UndirectedGraph, mode: ContainmentMode = ContainmentMode.SUBGRAPH,
                          edge_limit: int = DEFAULT_EDGE_LIMIT) -> FiveCycleStatements:
    return FiveCycleStatements(
        hom=undirected_hom(g, make_undirected_cycle(5)) is not None,
        pattern_free=search_orientations(g, _pattern_pruner(q_pattern(6)), edge_limit) is not None,
        forbidden_free=find_f_free_orientation(g, ForbiddenSet.five_cycle(mode), edge_limit) is not None,
        acyclic_forbidden_free=find_f_free_orientation(g, ForbiddenSet.five_cycle_acyclic(mode),
                                                       edge_limit) is not None)


@dataclass(frozen=True)
class RGHVResult:
    """
    Both sides of the Roy-Gallai-Hasse-Vitaver equivalence: a proper k-colouring and an
    orientation whose longest directed path has at most k vertices.
    """
    k: int
    colourable: bool
    colouring: Optional[Tuple[int, ...]]
    orientation: Optional[Orientation]

    @property
    def agree(self) -> bool:
        return self.colourable == (self.orientation is not None)


def _k_colouring(g: UndirectedGraph, k: int) -> Optional[Tuple[int, ...]]:
    model = cp_model.CpModel()
    colour = [model.NewIntVar(0, k - 1, "colour_{}".format(v)) for v in g.vertices()]
    for (u, v) in g.edges:
        model.Add(colour[u] != colour[v])
    solver = cp_model.CpSolver()
    solver.parameters.num_search_workers = 1
    solver.parameters.random_seed = 0
    status = solver.Solve(model)
    if status not in (cp_model.OPTIMAL, cp_model.FEASIBLE):
        return None
    return tuple(int(solver.Value(c)) for c in colour)


def rghv_colourability(g: UndirectedGraph, k: int, guard: Optional[int] = DEFAULT_RGHV_GUARD,
                       edge_limit: int = DEFAULT_EDGE_LIMIT) -> RGHVResult:
    """
    Cross-checks k-colourability against the existence of an acyclic orientation without a
    directed path on more than k vertices. Both sides are computed independently.

    :raises ResourceGuardError: if g has more than `guard` vertices
    :raises ValueError: if k < 1
    """
    if k < 1:
        raise ValueError("k must be positive, got {}".format(k))
    if guard is not None and g.order > guard:
        raise ResourceGuardError("the orientation side is limited to {} vertices, got {}".format(guard, g.order))
    colouring = _k_colouring(g, k)
    orientation = search_orientations(g, _path_length_pruner(k), edge_limit)
    result = RGHVResult(k, colouring is not None, colouring, orientation)
    if not result.agree:
        logger.error("colouring and orientation disagree for k = {}".format(k))
    return result
