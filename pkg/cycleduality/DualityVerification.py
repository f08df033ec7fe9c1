"""
DualityVerification.py
====================================
Desk-scale evidence for duality pairs and for path duality of oriented cycles.

(left, right) is a duality pair when for every digraph L exactly one of left -> L and L -> right
holds. `check_duality_pair` tests this on every oriented graph up to a small order and on seeded
random samples. Reports always say what was exhaustive and what was sampled.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional
import json
import logging
import random

from .Digraph import Digraph, OrientedGraph
from .Errors import GraphValidationError, ResourceGuardError
from .Families import FamilyTag, is_b_cycle, q_pattern, recognize_family
from .Homomorphism import DEFAULT_HOM_GUARD, exists_hom
from .Isomorphism import canonical_form, enumerate_oriented_graphs
from .SemiWalk import Direction, Pattern, cycle_traversal, find_pattern_walk

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_ORDER_CAP = 5
DEFAULT_ARC_PROBABILITY = 0.5


@dataclass(frozen=True)
class SampleSpec:
    """
    Seeded random sampling of connected oriented graphs with min_order..max_order vertices.
    """
    samples: int
    min_order: int
    max_order: int
    seed: int
    arc_probability: float = DEFAULT_ARC_PROBABILITY

    def __post_init__(self):
        if self.samples < 0:
            raise ValueError("samples must be non-negative, got {}".format(self.samples))
        if self.min_order < 1 or self.max_order < self.min_order:
            raise ValueError("sample orders must satisfy 1 <= min_order <= max_order, got {}..{}".format(
                self.min_order, self.max_order))


@dataclass
class Counterexample:
    graph: Digraph
    left_maps_in: bool
    maps_to_right: bool

    def to_dict(self) -> dict:
        return {"order": self.graph.order, "arcs": [list(a) for a in self.graph.arcs],
                "left_maps_in": self.left_maps_in, "maps_to_right": self.maps_to_right}


@dataclass
class DualityReport:
    """
    Outcome of a duality sweep. `counterexamples` is sorted canonically so the report does not
    depend on the order instances were checked in.
    """
    checked: int = 0
    exhaustive_up_to: int = 0
    sampled: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return len(self.counterexamples) == 0

    def to_dict(self) -> dict:
        return {"checked": self.checked, "exhaustive_up_to": self.exhaustive_up_to, "sampled": self.sampled,
                "counterexamples": [c.to_dict() for c in self.counterexamples]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = ["checked: {}".format(self.checked),
                 "exhaustive_up_to: {}".format(self.exhaustive_up_to),
                 "sampled: {}".format(self.sampled),
                 "counterexamples: {}".format(len(self.counterexamples))]
        for c in self.counterexamples:
            lines.append("  order {} arcs {} left->L {} L->right {}".format(
                c.graph.order, " ".join("{}>{}".format(u, v) for (u, v) in c.graph.arcs),
                "yes" if c.left_maps_in else "no", "yes" if c.maps_to_right else "no"))
        return "\n".join(lines)


def random_connected_oriented_graph(order: int, rng: random.Random,
                                    arc_probability: float = DEFAULT_ARC_PROBABILITY) -> OrientedGraph:
    """
    A random spanning tree (each vertex attached to a random earlier one, random direction) plus
    every other pair joined with probability `arc_probability` in a random direction.
    """
    if order < 1:
        raise ValueError("order must be positive, got {}".format(order))
    arcs = set()
    joined = set()
    for v in range(1, order):
        u = rng.randrange(v)
        arcs.add((u, v) if rng.random() < 0.5 else (v, u))
        joined.add((u, v))
    for u in range(order):
        for v in range(u + 1, order):
            if (u, v) in joined:
                continue
            if rng.random() < arc_probability:
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(order, sorted(arcs))


def _instances(max_order: int, sample_spec: Optional[SampleSpec]):
    for k in range(1, max_order + 1):
        for g in enumerate_oriented_graphs(k):
            yield g, False
    if sample_spec is not None:
        rng = random.Random(sample_spec.seed)
        for _ in range(sample_spec.samples):
            order = rng.randint(sample_spec.min_order, sample_spec.max_order)
            yield random_connected_oriented_graph(order, rng, sample_spec.arc_probability), True


def check_duality_pair(left: Digraph, right: Digraph, max_order: int,
                       sample_spec: Optional[SampleSpec] = None,
                       hom_guard: Optional[int] = DEFAULT_HOM_GUARD,
                       order_cap: int = DEFAULT_EXHAUSTIVE_ORDER_CAP) -> DualityReport:
    """
    Tests "left -> L xor L -> right" for every oriented graph L with at most max_order vertices
    and for the random samples of `sample_spec`.

    :param left: the obstruction
    :type left: Digraph
    :param right: the candidate dual
    :type right: Digraph
    :param max_order: largest order of the exhaustive part
    :type max_order: int
    :param sample_spec: optional seeded samples at larger orders
    :type sample_spec: SampleSpec
    :return: counts and canonically sorted counterexamples
    :rtype: DualityReport
    :raises ResourceGuardError: if max_order exceeds `order_cap`
    """
    if max_order > order_cap:
        raise ResourceGuardError("exhaustive duality sweeps are limited to order {}, got {}; use samples".format(
            order_cap, max_order))
    report = DualityReport(exhaustive_up_to=max_order)
    found = []
    for g, sampled in _instances(max_order, sample_spec):
        left_maps_in = exists_hom(left, g, hom_guard) is not None
        maps_to_right = exists_hom(g, right, hom_guard) is not None
        report.checked += 1
        if sampled:
            report.sampled += 1
        if left_maps_in == maps_to_right:
            found.append(Counterexample(g, left_maps_in, maps_to_right))
    report.counterexamples = sorted(found, key=lambda c: canonical_form(c.graph, guard=None))
    logger.info("duality sweep: {:,} instances, {:,} counterexamples".format(report.checked, len(found)))
    return report


def verify_dual_uniqueness(left: Digraph, dual: Digraph, candidate_order: int = 4,
                           instance_order: int = 3,
                           hom_guard: Optional[int] = DEFAULT_HOM_GUARD) -> List[Digraph]:
    """
    Every oriented graph D with at most candidate_order vertices that passes the duality test for
    `left` must be homomorphically equivalent to `dual`. A candidate is tested on every oriented
    graph up to instance_order plus `dual` and the candidate itself, which is enough for two true
    duals to map into each other. Returns the candidates that pass but are not equivalent.
    """
    offenders = []
    instances = [g for k in range(1, instance_order + 1) for g in enumerate_oriented_graphs(k)]
    for k in range(1, candidate_order + 1):
        for candidate in enumerate_oriented_graphs(k):
            if exists_hom(left, candidate, hom_guard) is not None:
                continue
            passes = True
            for g in instances + [dual, candidate]:
                if (exists_hom(left, g, hom_guard) is not None) == (exists_hom(g, candidate, hom_guard) is not None):
                    passes = False
                    break
            if not passes:
                continue
            equivalent = (exists_hom(candidate, dual, hom_guard) is not None
                          and exists_hom(dual, candidate, hom_guard) is not None)
            if not equivalent:
                offenders.append(candidate)
    return offenders


@dataclass
class PathDualityReport:
    """
    Compares g -> c with "every oriented path with at most max_path_arcs arcs that maps to g maps
    to c". For AC cycles the single obstruction Q_{n+1} is compared as well.
    """
    cycle_kind: str
    max_path_arcs: int
    maps_to_cycle: bool
    paths_map_to_cycle: bool
    separating_pattern: Optional[Pattern] = None
    single_path_agrees: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return self.maps_to_cycle == self.paths_map_to_cycle and self.single_path_agrees is not False

    def to_dict(self) -> dict:
        return {"cycle_kind": self.cycle_kind, "max_path_arcs": self.max_path_arcs,
                "maps_to_cycle": self.maps_to_cycle, "paths_map_to_cycle": self.paths_map_to_cycle,
                "separating_pattern": str(self.separating_pattern) if self.separating_pattern is not None else None,
                "single_path_agrees": self.single_path_agrees, "consistent": self.consistent}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def separating_path_pattern(g: Digraph, c: Digraph, max_path_arcs: int) -> Optional[Pattern]:
    """
    Shortest pattern with at most max_path_arcs symbols that some semi-walk of g follows but no
    semi-walk of c does, i.e. an oriented path mapping to g and not to c. Breadth first search over
    pairs of sets of walk end points.
    """
    start = (frozenset(g.vertices()), frozenset(c.vertices()))
    if start[0] and not start[1]:
        return Pattern()
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (ends_g, ends_c), symbols = queue.popleft()
        if len(symbols) == max_path_arcs:
            continue
        for d in (Direction.FORWARD, Direction.BACKWARD):
            if d is Direction.FORWARD:
                next_g = frozenset(w for v in ends_g for w in g.network.successors(v))
                next_c = frozenset(w for v in ends_c for w in c.network.successors(v))
            else:
                next_g = frozenset(w for v in ends_g for w in g.network.predecessors(v))
                next_c = frozenset(w for v in ends_c for w in c.network.predecessors(v))
            if not next_g:
                continue
            if not next_c:
                return Pattern(symbols + (d,))
            state = (next_g, next_c)
            if state not in seen:
                seen.add(state)
                queue.append((state, symbols + (d,)))
    return None


def check_path_duality(c: Digraph, g: Digraph, max_path_arcs: Optional[int] = None,
                       require_recognized: bool = True,
                       hom_guard: Optional[int] = DEFAULT_HOM_GUARD) -> PathDualityReport:
    """
    Checks path duality of the oriented cycle c on the instance g.

    :param c: an oriented cycle, a B-cycle or an AC cycle unless require_recognized is False
    :type c: Digraph
    :param g: the instance
    :type g: Digraph
    :param max_path_arcs: bound on the paths tried, defaults to 2 * |V_c|
    :type max_path_arcs: int
    :raises GraphValidationError: if c is not an oriented cycle, or is an unrecognised one
    """
    cycle_traversal(c)
    family = recognize_family(c)
    is_ac = family is not None and family.tag is FamilyTag.AC_CYCLE
    if is_ac:
        kind = str(family)
    elif is_b_cycle(c):
        kind = "b-cycle"
    elif require_recognized:
        raise GraphValidationError("path duality is only known for B-cycles and AC cycles")
    else:
        kind = "unrecognised"
    bound = max_path_arcs if max_path_arcs is not None else 2 * c.order
    maps_to_cycle = exists_hom(g, c, hom_guard) is not None
    separating = separating_path_pattern(g, c, bound)
    report = PathDualityReport(kind, bound, maps_to_cycle, separating is None, separating)
    if is_ac:
        q_free = find_pattern_walk(g, q_pattern(family.n + 1)) is None
        report.single_path_agrees = q_free == maps_to_cycle
    return report
