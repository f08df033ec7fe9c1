"""
Homomorphism.py
====================================
Brute-force homomorphism oracle.

`iterate_homomorphisms` runs arc consistency on the domains first and then backtracks with
forward checking. Variables are visited in descending total degree (ties by vertex id) and values
in ascending vertex id, so the first witness found is deterministic.
"""
from collections import deque
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set
import logging

from .Digraph import Digraph
from .Errors import GraphValidationError, ResourceGuardError

logger = logging.getLogger(__name__)

DEFAULT_HOM_GUARD = 200
DEFAULT_CORE_GUARD = 12


class Homomorphism:
    """
    An arc preserving map from the vertices of `source` to the vertices of `target`.
    """

    def __init__(self, source: Digraph, target: Digraph, mapping: Sequence[int], validate: bool = True):
        """Constructor method

        :param source: the digraph that is mapped
        :type source: Digraph
        :param target: the digraph mapped into
        :type target: Digraph
        :param mapping: mapping[v] is the image of source vertex v
        :type mapping: sequence of int
        :param validate: raise if some arc is not preserved
        :type validate: bool
        """
        mapping = tuple(mapping)
        if len(mapping) != source.order:
            raise GraphValidationError("a homomorphism needs one image per source vertex: {} != {}".format(
                len(mapping), source.order))
        for x in mapping:
            if not isinstance(x, int) or x < 0 or x >= target.order:
                raise GraphValidationError("image {} is outside the target range [0, {})".format(x, target.order))
        self._source = source
        self._target = target
        self._mapping = mapping
        if validate:
            broken = self.broken_arcs()
            if broken:
                u, v = broken[0]
                raise GraphValidationError("arc ({}, {}) is mapped to the non-arc ({}, {})".format(
                    u, v, mapping[u], mapping[v]))

    @property
    def source(self) -> Digraph:
        return self._source

    @property
    def target(self) -> Digraph:
        return self._target

    @property
    def mapping(self):
        return self._mapping

    def __getitem__(self, v: int) -> int:
        return self._mapping[v]

    def broken_arcs(self) -> List[tuple]:
        """source arcs whose image is not an arc of the target"""
        return [(u, v) for (u, v) in self._source.arcs
                if not self._target.has_arc(self._mapping[u], self._mapping[v])]

    def is_vertex_surjective(self) -> bool:
        return len(set(self._mapping)) == self._target.order

    def is_surjective(self) -> bool:
        """vertex and arc surjective, i.e. the target is exactly the image"""
        image_arcs = {(self._mapping[u], self._mapping[v]) for (u, v) in self._source.arcs}
        return self.is_vertex_surjective() and image_arcs == set(self._target.arcs)

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """
        returns other after self, a homomorphism from self.source to other.target
        """
        if other.source != self._target:
            raise GraphValidationError("cannot compose: the target of the first map is not the source of the second")
        return Homomorphism(self._source, other.target, [other[x] for x in self._mapping])

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (self._source, self._target, self._mapping) == (other._source, other._target, other._mapping)

    def __hash__(self):
        return hash(self._mapping)

    def __repr__(self):
        return "Homomorphism(mapping={})".format(list(self._mapping))


def _check_guard(g: Digraph, h: Digraph, guard: Optional[int]):
    if guard is not None and g.order * h.order > guard:
        raise ResourceGuardError("homomorphism search limited to |V_g|*|V_h| <= {}, got {} * {}".format(
            guard, g.order, h.order))


def _supported(a: int, domain: Set[int], h: Digraph, forward: bool) -> bool:
    if forward:
        return any(h.has_arc(a, b) for b in domain)
    return any(h.has_arc(b, a) for b in domain)


def _arc_consistent_domains(g: Digraph, h: Digraph) -> Optional[List[Set[int]]]:
    """
    AC-3 over the binary arc constraints. Returns None as soon as a domain runs empty.
    """
    domains = []
    for v in g.vertices():
        domain = set(h.vertices())
        if g.out_degree(v) > 0:
            domain = {a for a in domain if h.out_degree(a) > 0}
        if g.in_degree(v) > 0:
            domain = {a for a in domain if h.in_degree(a) > 0}
        domains.append(domain)
    # (x, y, forward): x must keep values with support in y along the arc x -> y (or y -> x)
    queue = deque()
    for (u, v) in g.arcs:
        queue.append((u, v, True))
        queue.append((v, u, False))
    while queue:
        x, y, forward = queue.popleft()
        kept = {a for a in domains[x] if _supported(a, domains[y], h, forward)}
        if len(kept) == len(domains[x]):
            continue
        domains[x] = kept
        if not kept:
            return None
        for w in g.network.successors(x):
            queue.append((w, x, False))
        for w in g.network.predecessors(x):
            queue.append((w, x, True))
    return domains


def iterate_homomorphisms(g: Digraph, h: Digraph, surjective: bool = False,
                          guard: Optional[int] = DEFAULT_HOM_GUARD) -> Iterator[Homomorphism]:
    """
    Yields every homomorphism g -> h (in a deterministic order).

    :param g: source digraph
    :type g: Digraph
    :param h: target digraph
    :type h: Digraph
    :param surjective: only yield vertex and arc surjective maps
    :type surjective: bool
    :param guard: largest |V_g| * |V_h| accepted, None disables the guard
    :type guard: int
    :raises ResourceGuardError: if the guard is exceeded
    """
    _check_guard(g, h, guard)
    if g.order == 0:
        if not surjective or h.order == 0:
            yield Homomorphism(g, h, ())
        return
    if surjective and (g.order < h.order or g.size < h.size):
        return
    domains = _arc_consistent_domains(g, h)
    if domains is None:
        return
    order = sorted(g.vertices(), key=lambda v: (-(g.out_degree(v) + g.in_degree(v)), v))
    assignment: Dict[int, int] = {}
    network = g.network

    def forward_check(x: int, a: int):
        removed = []
        for w in network.successors(x):
            if w in assignment:
                continue
            dropped = {b for b in domains[w] if not h.has_arc(a, b)}
            if dropped:
                domains[w] -= dropped
                removed.append((w, dropped))
        for w in network.predecessors(x):
            if w in assignment:
                continue
            dropped = {b for b in domains[w] if not h.has_arc(b, a)}
            if dropped:
                domains[w] -= dropped
                removed.append((w, dropped))
        return removed

    def consistent(x: int, a: int) -> bool:
        for w in network.successors(x):
            if w in assignment and not h.has_arc(a, assignment[w]):
                return False
        for w in network.predecessors(x):
            if w in assignment and not h.has_arc(assignment[w], a):
                return False
        return True

    def extend(depth: int):
        if depth == len(order):
            mapping = [assignment[v] for v in g.vertices()]
            hom = Homomorphism(g, h, mapping, validate=False)
            if not surjective or hom.is_surjective():
                yield hom
            return
        if surjective and len(order) - depth < h.order - len(set(assignment.values())):
            return
        x = order[depth]
        for a in sorted(domains[x]):
            if not consistent(x, a):
                continue
            assignment[x] = a
            removed = forward_check(x, a)
            if all(domains[w] for (w, _) in removed):
                yield from extend(depth + 1)
            for (w, dropped) in removed:
                domains[w] |= dropped
            del assignment[x]

    yield from extend(0)


def exists_hom(g: Digraph, h: Digraph, guard: Optional[int] = DEFAULT_HOM_GUARD) -> Optional[Homomorphism]:
    """
    returns a homomorphism g -> h or None if there is none. Never wrongly None.
    """
    return next(iterate_homomorphisms(g, h, guard=guard), None)


def hom_equivalent(g: Digraph, h: Digraph, guard: Optional[int] = DEFAULT_HOM_GUARD) -> bool:
    return exists_hom(g, h, guard) is not None and exists_hom(h, g, guard) is not None


def core_of(g: Digraph, guard: Optional[int] = DEFAULT_CORE_GUARD,
            hom_guard: Optional[int] = DEFAULT_HOM_GUARD) -> Digraph:
    """
    Returns the core of g as an induced subgraph (relabeled to 0..k-1, the original ids are in
    `vertex_ids`). Induced subgraphs are tried in increasing order, the first one g retracts to
    is the core.

    :param g: a digraph with at most `guard` vertices
    :type g: Digraph
    :raises ResourceGuardError: if g has more than `guard` vertices
    """
    if guard is not None and g.order > guard:
        raise ResourceGuardError("cores are only computed up to order {}, got {}".format(guard, g.order))
    if g.order == 0:
        return g
    for k in range(1, g.order + 1):
        for vertices in combinations(g.vertices(), k):
            sub = g.induced_subgraph(vertices)
            if sub.size == 0 and g.size > 0:
                continue
            if exists_hom(g, sub, hom_guard) is not None:
                logger.debug("core of order {} found at {}".format(k, list(vertices)))
                return sub
    return g
