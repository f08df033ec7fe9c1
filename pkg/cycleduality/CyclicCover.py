"""
CyclicCover.py
====================================
The n-cyclic cover of a connected oriented graph (n odd, n >= 5) and everything derived from it.

The cover is the ordered tuple (A_0, A_1, ..., A_m, D_m, ..., D_1) with m = (n-1)/2. A_0 holds
the vertices with both in- and out-neighbours, the other classes are grown layer by layer from
A_0. If A_0 is independent and no arc joins A_i with D_i (1 <= i <= m-1) the cover induces the
homomorphism A_i -> a_i, D_i -> a_{n-i} into AC_n. Otherwise a semi-walk following the pattern of
an even Q path is read off the selector functions.

Degree rule of the classes: for odd i every vertex of A_i has out-degree 0 and every vertex of D_i
has in-degree 0, for even i it is the other way round.
"""
from typing import Dict, FrozenSet, List, Optional, Tuple
import logging

import networkx as nx

from .Digraph import Digraph, OrientedGraph
from .Errors import ContractViolationError, GraphValidationError
from .Families import make_ac_cycle, q_pattern
from .Homomorphism import Homomorphism
from .SemiWalk import Direction, SemiWalk

logger = logging.getLogger(__name__)


class CyclicCover:
    """
    The classes of the n-cyclic cover in cyclic order. Position i of the tuple is the vertex a_i
    of AC_n the class is mapped to: A_i sits at position i and D_i at position n - i.

    For a directed bipartition (no vertex has both in- and out-neighbours) the tuple is (A_0, A_1)
    with A_0 the vertices without in-neighbours and A_1 the remaining ones.
    """

    def __init__(self, n: int, classes: Tuple[FrozenSet[int], ...], bipartition: bool, steps: int = 0):
        """Constructor method

        :param n: odd parameter of the cover
        :type n: int
        :param classes: (A_0, ..., A_m, D_m, ..., D_1) or (A_0, A_1) for a bipartition
        :type classes: tuple of frozenset
        :param bipartition: whether the construction stopped in its first step
        :type bipartition: bool
        :param steps: number of elementary adjacency inspections spent building the cover
        :type steps: int
        """
        self._n = n
        self._m = (n - 1) // 2
        self._classes = tuple(frozenset(c) for c in classes)
        self._bipartition = bipartition
        self._steps = steps
        self._position = {}
        for i, c in enumerate(self._classes):
            for v in c:
                self._position[v] = i

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def classes(self) -> Tuple[FrozenSet[int], ...]:
        return self._classes

    @property
    def bipartition(self) -> bool:
        return self._bipartition

    @property
    def steps(self) -> int:
        return self._steps

    def a(self, i: int) -> FrozenSet[int]:
        """the class A_i"""
        if self._bipartition:
            return self._classes[i] if i < 2 else frozenset()
        return self._classes[i]

    def d(self, i: int) -> FrozenSet[int]:
        """the class D_i, 1 <= i <= m"""
        if self._bipartition:
            return frozenset()
        if i < 1 or i > self._m:
            raise IndexError("D_{} does not exist for n = {}".format(i, self._n))
        return self._classes[self._n - i]

    def position(self, v: int) -> int:
        """index of the class containing v in the cyclic order, i.e. the AC_n vertex of v"""
        return self._position[v]

    def vertices(self):
        return set(self._position)

    def __repr__(self):
        return "CyclicCover(n={}, classes={}, bipartition={})".format(
            self._n, [sorted(c) for c in self._classes], self._bipartition)


class SelectorFunctions:
    """
    l(x) and r(x) are the smallest in- and out-neighbour of x in A_0. p(x) is the smallest
    neighbour of x in the previous class (A_{i-1} for x in A_i, D_{i-1} for x in D_i, A_0 for
    x in A_1 or D_1). Vertices of A_m or D_m that are not adjacent to the previous class have no
    parent.
    """

    def __init__(self, left: Dict[int, int], right: Dict[int, int], parent: Dict[int, Optional[int]]):
        self._left = dict(left)
        self._right = dict(right)
        self._parent = dict(parent)

    def l(self, x: int) -> int:
        return self._left[x]

    def r(self, x: int) -> int:
        return self._right[x]

    def p(self, x: int) -> Optional[int]:
        return self._parent.get(x)

    def __repr__(self):
        return "SelectorFunctions(l={}, r={}, p={})".format(self._left, self._right, self._parent)


def _check_parameter(n):
    if not isinstance(n, int) or n < 5 or n % 2 == 0:
        raise GraphValidationError("the cyclic cover needs an odd n >= 5, got {!r}".format(n))


def build_cyclic_cover(g: Digraph, n: int) -> Tuple[CyclicCover, SelectorFunctions]:
    """
    Builds the n-cyclic cover of a connected oriented graph together with its selectors.

    :param g: a connected oriented graph
    :type g: Digraph
    :param n: odd, at least 5
    :type n: int
    :return: the cover and the selector functions (empty for a directed bipartition)
    :rtype: tuple(CyclicCover, SelectorFunctions)
    :raises GraphValidationError: for disconnected or non oriented input, or a bad n
    """
    _check_parameter(n)
    if g.order == 0 or not nx.is_weakly_connected(g.network):
        raise GraphValidationError("the cyclic cover needs a connected digraph")
    if not g.is_oriented():
        raise GraphValidationError("the cyclic cover needs an oriented graph, found symmetric pair {}".format(
            g.symmetric_pairs()[0]))
    network = g.network
    m = (n - 1) // 2
    steps = 0

    out_degree = {}
    in_degree = {}
    for v in g.vertices():
        out_degree[v] = network.out_degree(v)
        in_degree[v] = network.in_degree(v)
        steps += 1
    steps += g.size

    a0 = {v for v in g.vertices() if out_degree[v] > 0 and in_degree[v] > 0}
    steps += g.order
    if not a0:
        sources = frozenset(v for v in g.vertices() if in_degree[v] == 0)
        sinks = frozenset(v for v in g.vertices() if v not in sources)
        steps += g.order
        logger.debug("directed bipartition with {:,} sources and {:,} sinks".format(len(sources), len(sinks)))
        return CyclicCover(n, (sources, sinks), True, steps), SelectorFunctions({}, {}, {})

    covered = set(a0)
    a_layers = [frozenset(a0)]
    d_layers = [frozenset(a0)]
    # layer 1: out-neighbours of A_0 become A_1, in-neighbours become D_1
    a1, d1 = set(), set()
    for x in a0:
        for w in network.successors(x):
            steps += 1
            if w not in covered:
                a1.add(w)
        for w in network.predecessors(x):
            steps += 1
            if w not in covered:
                d1.add(w)
    covered |= a1 | d1
    a_layers.append(frozenset(a1))
    d_layers.append(frozenset(d1))

    for i in range(2, m):
        ai, di = set(), set()
        for x in a_layers[i - 1]:
            for w in nx.all_neighbors(network, x):
                steps += 1
                if w not in covered:
                    ai.add(w)
        for x in d_layers[i - 1]:
            for w in nx.all_neighbors(network, x):
                steps += 1
                if w not in covered:
                    di.add(w)
        if ai & di:
            raise ContractViolationError("A_{} and D_{} overlap in {}".format(i, i, sorted(ai & di)))
        covered |= ai | di
        a_layers.append(frozenset(ai))
        d_layers.append(frozenset(di))

    remaining = [v for v in g.vertices() if v not in covered]
    steps += g.order
    without_out = frozenset(v for v in remaining if out_degree[v] == 0)
    without_in = frozenset(v for v in remaining if in_degree[v] == 0)
    if (all(out_degree[v] == 0 for v in a_layers[m - 1]) and
            all(in_degree[v] == 0 for v in d_layers[m - 1])):
        d_m, a_m = without_out, without_in
    else:
        d_m, a_m = without_in, without_out
    steps += len(a_layers[m - 1]) + len(d_layers[m - 1])
    a_layers.append(a_m)
    d_layers.append(d_m)

    classes = tuple(a_layers[:m + 1]) + tuple(d_layers[i] for i in range(m, 0, -1))
    cover = CyclicCover(n, classes, False, steps)

    left = {}
    right = {}
    for x in sorted(a0):
        left[x] = min(network.predecessors(x))
        right[x] = min(network.successors(x))
        steps += out_degree[x] + in_degree[x]
    parent = {}
    for i in range(1, m + 1):
        for layer, previous in ((a_layers[i], a_layers[i - 1]), (d_layers[i], d_layers[i - 1])):
            for x in layer:
                candidates = [w for w in nx.all_neighbors(network, x) if w in previous]
                steps += out_degree[x] + in_degree[x]
                parent[x] = min(candidates) if candidates else None
    cover._steps = steps
    logger.debug("{}-cyclic cover of {:,} vertices built in {:,} steps".format(n, g.order, steps))
    return cover, SelectorFunctions(left, right, parent)


def _check_match(cover: CyclicCover, g: Digraph, n: int):
    if cover.n != n:
        raise GraphValidationError("cover was built for n = {}, not {}".format(cover.n, n))
    if cover.vertices() != set(g.vertices()):
        raise GraphValidationError("cover does not partition the vertices of the graph")


def _violating_arc(cover: CyclicCover, g: Digraph) -> Optional[Tuple[int, Tuple[int, int]]]:
    """
    The first arc that stops the cover from inducing a homomorphism: k = 0 for an arc inside A_0,
    otherwise the smallest k in 1..m-1 with an arc between A_k and D_k.
    """
    a0 = cover.a(0)
    for (u, v) in g.arcs:
        if u in a0 and v in a0:
            return 0, (u, v)
    for k in range(1, cover.m):
        ak, dk = cover.a(k), cover.d(k)
        for (u, v) in g.arcs:
            if (u in ak and v in dk) or (u in dk and v in ak):
                return k, (u, v)
    return None


def cover_induced_hom(cover: CyclicCover, g: Digraph, n: int) -> Optional[Homomorphism]:
    """
    Returns the homomorphism g -> AC_n induced by the cover, or None if A_0 is not independent or
    some arc joins A_i and D_i for 1 <= i <= m-1.

    :raises GraphValidationError: if the cover does not belong to g and n
    """
    _check_match(cover, g, n)
    if not cover.bipartition and _violating_arc(cover, g) is not None:
        return None
    mapping = [cover.position(v) for v in g.vertices()]
    hom = Homomorphism(g, make_ac_cycle(n), mapping, validate=False)
    broken = hom.broken_arcs()
    if broken:
        raise ContractViolationError("cover induced map breaks arc {}".format(broken[0]))
    return hom


def extract_no_certificate(g: Digraph, cover: CyclicCover, selectors: SelectorFunctions,
                           n: int) -> Tuple[SemiWalk, int]:
    """
    Reads a semi-walk following the pattern of Q_l (l even, 4 <= l <= n+1) off a cover that does
    not induce a homomorphism.

    For an arc x -> y inside A_0 the walk is l(x), x, y, r(y) with l = 4. For an arc between
    a_k in A_k and d_k in D_k the walk is l(a_0), a_0, ..., a_k, d_k, ..., d_0, r(d_0) where the
    a_i and d_i are obtained from a_k and d_k by following the parent selector; l = 2k + 4.

    :return: the walk and l
    :rtype: tuple(SemiWalk, int)
    :raises ContractViolationError: if the cover does induce a homomorphism
    """
    _check_match(cover, g, n)
    if cover.bipartition:
        raise ContractViolationError("a directed bipartition always induces a homomorphism")
    found = _violating_arc(cover, g)
    if found is None:
        raise ContractViolationError("the cover induces a homomorphism, there is no no-certificate")
    k, (u, v) = found
    if k == 0:
        vertices = [selectors.l(u), u, v, selectors.r(v)]
        l = 4
    else:
        a, d = (u, v) if u in cover.a(k) else (v, u)
        chain_a = [a]
        chain_d = [d]
        for _ in range(k):
            chain_a.append(selectors.p(chain_a[-1]))
            chain_d.append(selectors.p(chain_d[-1]))
        if None in chain_a or None in chain_d:
            raise ContractViolationError("parent chain from layer {} does not reach A_0".format(k))
        chain_a.reverse()
        vertices = [selectors.l(chain_a[0])] + chain_a + chain_d + [selectors.r(chain_d[-1])]
        l = 2 * k + 4
    pattern = q_pattern(l)
    walk = SemiWalk(vertices, pattern)
    problems = walk.violations(g)
    if problems:
        raise ContractViolationError("extracted walk does not follow Q_{}: {}".format(l, problems[0]))
    logger.debug("no-certificate of length {} from arc {}".format(l, (u, v)))
    return walk, l


def cover_violations(g: Digraph, cover: CyclicCover) -> List[str]:
    """
    Checks the four structural properties of a cover and lists every violation:

    * degrees: odd i: A_i has out-degree 0 and D_i in-degree 0; even i (>= 2) the reverse
    * the classes are pairwise disjoint and cover every vertex
    * all classes are independent iff A_0 is independent
    * every arc joins consecutive classes of (A_0, ..., A_m, D_m, ..., D_1, A_0), lies inside A_0
      or joins D_i and A_i for some 1 <= i <= m-1
    """
    problems = []
    seen = set()
    for c in cover.classes:
        overlap = seen & c
        if overlap:
            problems.append("classes overlap in {}".format(sorted(overlap)))
        seen |= c
    if seen != set(g.vertices()):
        problems.append("classes miss vertices {}".format(sorted(set(g.vertices()) - seen)))

    if cover.bipartition:
        for v in cover.a(0):
            if g.in_degree(v) > 0:
                problems.append("vertex {} of A_0 has an in-neighbour in a directed bipartition".format(v))
        for v in cover.a(1):
            if g.out_degree(v) > 0:
                problems.append("vertex {} of A_1 has an out-neighbour in a directed bipartition".format(v))
        return problems

    n, m = cover.n, cover.m
    for i in range(1, m + 1):
        a_degree, d_degree = (g.out_degree, g.in_degree) if i % 2 == 1 else (g.in_degree, g.out_degree)
        for v in cover.a(i):
            if a_degree(v) != 0:
                problems.append("vertex {} of A_{} breaks the degree rule".format(v, i))
        for v in cover.d(i):
            if d_degree(v) != 0:
                problems.append("vertex {} of D_{} breaks the degree rule".format(v, i))

    classes_independent = all(not (u in c and v in c) for c in cover.classes for (u, v) in g.arcs)
    a0_independent = all(not (u in cover.a(0) and v in cover.a(0)) for (u, v) in g.arcs)
    if classes_independent != a0_independent:
        problems.append("independence of the classes differs from independence of A_0")

    for (u, v) in g.arcs:
        i, j = cover.position(u), cover.position(v)
        if i == j == 0:
            continue
        if (i - j) % n in (1, n - 1):
            continue
        if i + j == n and 1 <= min(i, j) <= m - 1:
            continue
        problems.append("arc ({}, {}) joins non consecutive classes {} and {}".format(u, v, i, j))
    return problems
