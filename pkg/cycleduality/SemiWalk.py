"""
SemiWalk.py
====================================
Semi-walks, their patterns and the measures derived from traversing oriented paths and cycles.

A semi-walk may use arcs against their direction. Its pattern records, step by step, whether an
arc was used forward (F) or backward (B). Patterns are the language of the no-certificates of
the AC decider: a semi-walk following the pattern of an oriented path P exists in G if and only
if P is homomorphic to G.
"""
from collections import Counter
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

from .Digraph import Digraph
from .Errors import EmptyPatternError, GraphValidationError

logger = logging.getLogger(__name__)


class Direction(Enum):
    FORWARD = 'F'
    BACKWARD = 'B'

    def flipped(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


class Pattern:
    """
    A sequence of forward / backward symbols. Immutable and hashable.
    """

    def __init__(self, symbols: Iterable[Direction] = ()):
        symbols = tuple(symbols)
        for s in symbols:
            if not isinstance(s, Direction):
                raise GraphValidationError("pattern symbols must be Directions, got {!r}".format(s))
        self._symbols = symbols

    @classmethod
    def from_string(cls, text: str) -> "Pattern":
        """
        parses strings like "FFBFF"

        :param text: a string over the alphabet {F, B}
        :type text: str
        :return: the pattern
        :rtype: Pattern
        """
        try:
            return cls(Direction(c) for c in text)
        except ValueError:
            raise GraphValidationError("patterns are strings over F and B, got {!r}".format(text))

    @property
    def symbols(self) -> Tuple[Direction, ...]:
        return self._symbols

    @property
    def net_length(self) -> int:
        return sum(1 if s is Direction.FORWARD else -1 for s in self._symbols)

    def cumulative_levels(self) -> List[int]:
        """levels reached after each prefix, starting with 0 for the empty prefix"""
        levels = [0]
        for s in self._symbols:
            levels.append(levels[-1] + (1 if s is Direction.FORWARD else -1))
        return levels

    def reversed(self) -> "Pattern":
        """the pattern of the same walk read from its last vertex to its first"""
        return Pattern(s.flipped() for s in reversed(self._symbols))

    def __len__(self):
        return len(self._symbols)

    def __iter__(self):
        return iter(self._symbols)

    def __getitem__(self, i):
        return self._symbols[i]

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return self._symbols == other._symbols

    def __hash__(self):
        return hash(self._symbols)

    def __str__(self):
        return "".join(s.value for s in self._symbols)

    def __repr__(self):
        return "Pattern('{}')".format(str(self))


class SemiWalk:
    """
    A sequence of vertices v_1..v_k together with the k-1 directions used between consecutive
    vertices. Vertices may repeat. Whether the walk exists in a digraph is checked against a host
    with `violations` / `is_valid_in`.
    """

    def __init__(self, vertices: Sequence[int], directions: Iterable[Direction]):
        vertices = tuple(vertices)
        if isinstance(directions, str):
            directions = Pattern.from_string(directions)
        if isinstance(directions, Pattern):
            directions = directions.symbols
        directions = Pattern(directions)
        if len(vertices) == 0:
            raise GraphValidationError("a semi-walk needs at least one vertex")
        if len(directions) != len(vertices) - 1:
            raise GraphValidationError("a semi-walk on {} vertices needs {} directions, got {}".format(
                len(vertices), len(vertices) - 1, len(directions)))
        self._vertices = vertices
        self._directions = directions

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def directions(self) -> Pattern:
        return self._directions

    def steps(self):
        """yields (u, v, direction) for every step of the walk"""
        for i, d in enumerate(self._directions):
            yield self._vertices[i], self._vertices[i + 1], d

    def arcs_used(self) -> List[Tuple[int, int]]:
        """the host arcs traversed, in order, written with their true orientation"""
        return [(u, v) if d is Direction.FORWARD else (v, u) for (u, v, d) in self.steps()]

    def violations(self, host: Digraph) -> List[str]:
        """
        lists every step of the walk that is not backed by an arc of `host`
        """
        problems = []
        for v in self._vertices:
            if not isinstance(v, int) or v < 0 or v >= host.order:
                problems.append("vertex {} is outside the vertex range [0, {})".format(v, host.order))
        if problems:
            return problems
        for i, (u, v, d) in enumerate(self.steps()):
            arc = (u, v) if d is Direction.FORWARD else (v, u)
            if not host.has_arc(*arc):
                problems.append("step {} ({} {} {}) needs the missing arc {}".format(i, u, d.value, v, arc))
        return problems

    def is_valid_in(self, host: Digraph) -> bool:
        return len(self.violations(host)) == 0

    def relabeled(self, names: Sequence[int]) -> "SemiWalk":
        """renames vertex v to names[v]"""
        return SemiWalk([names[v] for v in self._vertices], self._directions)

    def __len__(self):
        return len(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, SemiWalk):
            return NotImplemented
        return self._vertices == other._vertices and self._directions == other._directions

    def __hash__(self):
        return hash((self._vertices, self._directions))

    def __repr__(self):
        return "SemiWalk(vertices={}, pattern='{}')".format(list(self._vertices), self._directions)


def pattern_of(walk: SemiWalk) -> Pattern:
    """
    returns the direction sequence of a walk with at least two vertices

    :raises EmptyPatternError: for single vertex walks
    """
    if len(walk) < 2:
        raise EmptyPatternError("the pattern of a single vertex walk is empty")
    return walk.directions


def _underlying_degrees(g: Digraph) -> List[int]:
    return [len(g.neighbours(v)) for v in g.vertices()]


def path_traversal(g: Digraph) -> SemiWalk:
    """
    Traverses an oriented path from its smallest endpoint to the other endpoint.

    :param g: an oriented path
    :type g: Digraph
    :return: the traversal covering every arc once
    :rtype: SemiWalk
    :raises GraphValidationError: if `g` is not an oriented path
    """
    if g.order == 0:
        raise GraphValidationError("not a path: the empty graph has no traversal")
    if not g.is_oriented():
        raise GraphValidationError("not a path: symmetric pair {}".format(g.symmetric_pairs()[0]))
    degrees = _underlying_degrees(g)
    if g.size != g.order - 1 or max(degrees) > 2 or (g.order > 1 and min(degrees) == 0):
        raise GraphValidationError("not a path: underlying graph must be a path")
    if g.order == 1:
        return SemiWalk((0,), ())
    start = min(v for v in g.vertices() if degrees[v] == 1)
    vertices = [start]
    directions = []
    previous = None
    current = start
    while len(vertices) < g.order:
        nxt = [w for w in g.neighbours(current) if w != previous]
        if not nxt:
            raise GraphValidationError("not a path: underlying graph is disconnected")
        w = nxt[0]
        directions.append(Direction.FORWARD if g.has_arc(current, w) else Direction.BACKWARD)
        vertices.append(w)
        previous, current = current, w
    if len(set(vertices)) != g.order:
        raise GraphValidationError("not a path: underlying graph contains a cycle")
    return SemiWalk(vertices, directions)


def cycle_traversal(g: Digraph) -> SemiWalk:
    """
    Traverses an oriented cycle starting at vertex 0 towards its smallest neighbour and returns
    the closed walk c_0, c_1, ..., c_{k-1}, c_0.

    :raises GraphValidationError: if `g` is not an oriented cycle
    """
    if g.order < 3:
        raise GraphValidationError("not a cycle: oriented cycles need at least 3 vertices")
    if not g.is_oriented():
        raise GraphValidationError("not a cycle: symmetric pair {}".format(g.symmetric_pairs()[0]))
    if g.size != g.order or any(d != 2 for d in _underlying_degrees(g)):
        raise GraphValidationError("not a cycle: every vertex needs exactly two neighbours")
    vertices = [0]
    directions = []
    previous, current = None, 0
    while True:
        candidates = [w for w in g.neighbours(current) if w != previous]
        w = candidates[0]
        directions.append(Direction.FORWARD if g.has_arc(current, w) else Direction.BACKWARD)
        vertices.append(w)
        if w == 0:
            break
        previous, current = current, w
    if len(vertices) != g.order + 1:
        raise GraphValidationError("not a cycle: underlying graph is disconnected")
    return SemiWalk(vertices, directions)


def net_length(path_or_cycle: Digraph, traversal: SemiWalk) -> int:
    """
    Number of forward minus number of backward steps of a traversal that uses every arc of the
    host exactly once.

    :raises GraphValidationError: if the traversal is invalid or does not use each arc exactly once
    """
    problems = traversal.violations(path_or_cycle)
    if problems:
        raise GraphValidationError("invalid traversal: {}".format(problems[0]))
    used = Counter(traversal.arcs_used())
    if len(used) != path_or_cycle.size or any(c != 1 for c in used.values()):
        raise GraphValidationError("invalid traversal: every arc must be traversed exactly once")
    return traversal.directions.net_length


def level_spread(path: Digraph) -> int:
    """
    max - min of the cumulative levels along an oriented path. This is the smallest k - 1 such
    that the path maps to the directed path on k vertices.
    """
    levels = path_traversal(path).directions.cumulative_levels()
    return max(levels) - min(levels)


def find_pattern_walk(g: Digraph, p: Pattern) -> Optional[SemiWalk]:
    """
    Searches a semi-walk in `g` that follows the pattern `p` by layered reachability.

    Layer i holds every vertex at which a walk following the first i symbols can end. For each
    reached vertex one predecessor is kept (the smallest id) so that the returned witness is
    deterministic. Runs in O(|p| * (|V| + |A|)).

    :param g: host digraph
    :type g: Digraph
    :param p: the pattern to follow
    :type p: Pattern
    :return: a semi-walk in g following p or None
    :rtype: SemiWalk
    """
    if g.order == 0:
        return None
    network = g.network
    current = range(g.order)
    predecessors = []
    for symbol in p:
        layer = {}
        step = network.successors if symbol is Direction.FORWARD else network.predecessors
        for v in sorted(current):
            for w in step(v):
                if w not in layer:
                    layer[w] = v
        if not layer:
            logger.debug("pattern {} dies after {:,} symbols".format(p, len(predecessors)))
            return None
        predecessors.append(layer)
        current = layer.keys()
    end = min(current)
    vertices = [end]
    for layer in reversed(predecessors):
        vertices.append(layer[vertices[-1]])
    vertices.reverse()
    return SemiWalk(vertices, p.symbols)
