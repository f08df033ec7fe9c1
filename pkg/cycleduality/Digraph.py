"""
Digraph.py
====================================
Immutable graph carriers used by every other module.

Vertices are always the dense integers 0..order-1. The arcs (or edges) are stored in a frozen
networkx graph that is exposed via the `network` property so that connectivity, acyclicity and
matching questions can be delegated to networkx.
"""
import networkx as nx
from typing import Iterable, List, Optional, Sequence, Tuple

from .Errors import GraphValidationError

Arc = Tuple[int, int]


def _check_order(order) -> int:
    if not isinstance(order, int) or isinstance(order, bool):
        raise GraphValidationError("order must be an integer, got {!r}".format(order))
    if order < 0:
        raise GraphValidationError("order must be non-negative, got {}".format(order))
    return order


def _check_pair(u, v, order: int, kind: str = "arc"):
    for x in (u, v):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0 or x >= order:
            raise GraphValidationError(
                "{} ({}, {}) has an endpoint outside the vertex range [0, {})".format(kind, u, v, order))
    if u == v:
        raise GraphValidationError("loops are not allowed: {} ({}, {})".format(kind, u, v))


class Digraph:
    """
    A finite loopless digraph on the vertices 0..order-1.

    Symmetric pairs (u, v), (v, u) are allowed here. Everything produced by the family
    constructors is an `OrientedGraph` instead.
    """

    def __init__(self, order: int, arcs: Iterable[Arc] = (), vertex_ids: Optional[Sequence[int]] = None):
        """Constructor method

        :param order: number of vertices
        :type order: int
        :param arcs: ordered vertex pairs (u, v) with u != v
        :type arcs: iterable of tuple(int, int)
        :param vertex_ids: ids of the vertices in a larger graph this one was taken from, defaults to 0..order-1
        :type vertex_ids: sequence of int
        """
        order = _check_order(order)
        if vertex_ids is not None and len(vertex_ids) != order:
            raise GraphValidationError("expected {} vertex ids, got {}".format(order, len(vertex_ids)))
        network = nx.DiGraph()
        network.add_nodes_from(range(order))
        for arc in arcs:
            u, v = arc
            _check_pair(u, v, order)
            network.add_edge(u, v)
        self._order = order
        self._network = nx.freeze(network)
        self._arcs = tuple(sorted(network.edges()))
        self._vertex_ids = tuple(vertex_ids) if vertex_ids is not None else tuple(range(order))

    @property
    def order(self) -> int:
        return self._order

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        """sorted tuple of all arcs"""
        return self._arcs

    @property
    def size(self) -> int:
        return len(self._arcs)

    @property
    def network(self) -> nx.DiGraph:
        return self._network

    def vertices(self) -> range:
        return range(self._order)

    def has_arc(self, u: int, v: int) -> bool:
        return self._network.has_edge(u, v)

    def out_neighbours(self, v: int) -> List[int]:
        return sorted(self._network.successors(v))

    def in_neighbours(self, v: int) -> List[int]:
        return sorted(self._network.predecessors(v))

    def neighbours(self, v: int) -> List[int]:
        """all vertices joined to v by an arc in either direction"""
        return sorted(set(self._network.successors(v)) | set(self._network.predecessors(v)))

    def out_degree(self, v: int) -> int:
        return self._network.out_degree(v)

    def in_degree(self, v: int) -> int:
        return self._network.in_degree(v)

    def symmetric_pairs(self) -> List[Arc]:
        """
        returns the pairs (u, v), u < v, such that both (u, v) and (v, u) are arcs
        """
        return [(u, v) for (u, v) in self._arcs if u < v and self._network.has_edge(v, u)]

    def is_oriented(self) -> bool:
        return len(self.symmetric_pairs()) == 0

    def underlying_graph(self) -> "UndirectedGraph":
        return UndirectedGraph(self._order, self._arcs)

    def _rebuild(self, order: int, arcs: Iterable[Arc], vertex_ids: Optional[Sequence[int]] = None):
        return type(self)(order, arcs, vertex_ids)

    def relabeled(self, permutation: Sequence[int]):
        """
        returns an isomorphic copy in which vertex v is renamed to permutation[v]

        :param permutation: a permutation of 0..order-1
        :type permutation: sequence of int
        """
        if sorted(permutation) != list(range(self._order)):
            raise GraphValidationError("relabeling must be a permutation of 0..{}".format(self._order - 1))
        return self._rebuild(self._order, [(permutation[u], permutation[v]) for (u, v) in self._arcs])

    def induced_subgraph(self, vertices: Iterable[int]):
        """
        returns the subgraph induced by `vertices`, relabeled to 0..k-1 in ascending order of the
        original vertex ids. The list of original ids is available as `vertex_ids` on the result.
        """
        kept = sorted(set(vertices))
        for v in kept:
            if v < 0 or v >= self._order:
                raise GraphValidationError("vertex {} is outside the vertex range [0, {})".format(v, self._order))
        position = {v: i for i, v in enumerate(kept)}
        arcs = [(position[u], position[v]) for (u, v) in self._arcs if u in position and v in position]
        return self._rebuild(len(kept), arcs, kept)

    @property
    def vertex_ids(self) -> Tuple[int, ...]:
        """original vertex ids when this graph was produced by `induced_subgraph`"""
        return self._vertex_ids

    def converse(self):
        """returns the digraph with every arc reversed"""
        return self._rebuild(self._order, [(v, u) for (u, v) in self._arcs])

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._order == other._order and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._order, self._arcs))

    def __repr__(self):
        return "{}(order={}, arcs={})".format(type(self).__name__, self._order, list(self._arcs))


class OrientedGraph(Digraph):
    """
    A digraph without symmetric pairs, i.e. an orientation of a simple graph.
    """

    def __init__(self, order: int, arcs: Iterable[Arc] = (), vertex_ids: Optional[Sequence[int]] = None):
        super().__init__(order, arcs, vertex_ids)
        pairs = self.symmetric_pairs()
        if pairs:
            u, v = pairs[0]
            raise GraphValidationError(
                "oriented graphs must be antisymmetric, found symmetric pair ({}, {})".format(u, v))

    @classmethod
    def from_digraph(cls, g: Digraph) -> "OrientedGraph":
        if isinstance(g, OrientedGraph):
            return g
        return cls(g.order, g.arcs)


class UndirectedGraph:
    """
    A finite simple graph on the vertices 0..order-1. Edges are stored as pairs (u, v) with u < v.
    """

    def __init__(self, order: int, edges: Iterable[Arc] = ()):
        order = _check_order(order)
        network = nx.Graph()
        network.add_nodes_from(range(order))
        for edge in edges:
            u, v = edge
            _check_pair(u, v, order, kind="edge")
            network.add_edge(u, v)
        self._order = order
        self._network = nx.freeze(network)
        self._edges = tuple(sorted((min(u, v), max(u, v)) for (u, v) in network.edges()))

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> Tuple[Arc, ...]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def network(self) -> nx.Graph:
        return self._network

    def vertices(self) -> range:
        return range(self._order)

    def has_edge(self, u: int, v: int) -> bool:
        return self._network.has_edge(u, v)

    def neighbours(self, v: int) -> List[int]:
        return sorted(self._network.neighbors(v))

    def degree(self, v: int) -> int:
        return self._network.degree(v)

    def as_symmetric_digraph(self) -> Digraph:
        """every edge {u, v} becomes the symmetric pair (u, v), (v, u)"""
        return Digraph(self._order, [a for (u, v) in self._edges for a in ((u, v), (v, u))])

    def relabeled(self, permutation: Sequence[int]) -> "UndirectedGraph":
        if sorted(permutation) != list(range(self._order)):
            raise GraphValidationError("relabeling must be a permutation of 0..{}".format(self._order - 1))
        return UndirectedGraph(self._order, [(permutation[u], permutation[v]) for (u, v) in self._edges])

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self):
        return hash(("graph", self._order, self._edges))

    def __repr__(self):
        return "UndirectedGraph(order={}, edges={})".format(self._order, list(self._edges))
