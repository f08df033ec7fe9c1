"""
ImageSet.py
====================================
Surjective homomorphic images of small oriented graphs.

An image is a quotient of the source by a vertex partition in which no block contains two
adjacent vertices and which creates no symmetric pair. The quotient is then the vertex and arc
surjective image of the quotient map.
"""
from typing import Iterator, List, Optional, Tuple
import logging

from .Digraph import Digraph, OrientedGraph
from .Errors import ResourceGuardError
from .Isomorphism import canonical_form, isomorphic

logger = logging.getLogger(__name__)

DEFAULT_IMAGE_GUARD = 10


class ImageSet:
    """
    Pairwise non-isomorphic surjective homomorphic images of `source`. When the source is a Q
    path, `n` holds its order (the provenance of the set F_n).
    """

    def __init__(self, source: Digraph, members: List[OrientedGraph], n: Optional[int] = None):
        self._source = source
        self._members = tuple(members)
        self._n = n

    @property
    def source(self) -> Digraph:
        return self._source

    @property
    def members(self) -> Tuple[OrientedGraph, ...]:
        return self._members

    @property
    def n(self) -> Optional[int]:
        return self._n

    def index_of(self, g: Digraph) -> Optional[int]:
        """position of the member isomorphic to g or None"""
        for i, member in enumerate(self._members):
            if isomorphic(member, g):
                return i
        return None

    def __contains__(self, g):
        return self.index_of(g) is not None

    def __len__(self):
        return len(self._members)

    def __iter__(self) -> Iterator[OrientedGraph]:
        return iter(self._members)

    def __repr__(self):
        return "ImageSet(n={}, members={})".format(self._n, len(self._members))


def _partitions(g: Digraph):
    """
    Restricted growth strings for the vertex partitions whose blocks are independent sets.
    """
    order = g.order
    blocks = [0] * order
    neighbours = [g.neighbours(v) for v in range(order)]

    def extend(v: int, used: int):
        if v == order:
            yield tuple(blocks)
            return
        for b in range(used + 1):
            if any(w < v and blocks[w] == b for w in neighbours[v]):
                continue
            blocks[v] = b
            yield from extend(v + 1, max(used, b + 1))

    if order == 0:
        yield ()
        return
    blocks[0] = 0
    yield from extend(1, 1)


def surjective_images(g: Digraph, guard: int = DEFAULT_IMAGE_GUARD, n: Optional[int] = None) -> ImageSet:
    """
    Enumerates every vertex partition of g with independent blocks, forms the quotient and keeps
    one representative per isomorphism class, dropping quotients with a symmetric pair.

    :param g: the source, at most `guard` vertices
    :type g: Digraph
    :param n: recorded as the provenance of the set
    :type n: int
    :return: the images ordered by decreasing order, then canonical code
    :rtype: ImageSet
    :raises ResourceGuardError: if g has more than `guard` vertices
    """
    if guard is not None and g.order > guard:
        raise ResourceGuardError("surjective images are limited to order {}, got {}".format(guard, g.order))
    found = {}
    partitions = 0
    for blocks in _partitions(g):
        partitions += 1
        k = max(blocks) + 1 if blocks else 0
        arcs = {(blocks[u], blocks[v]) for (u, v) in g.arcs}
        if any((v, u) in arcs for (u, v) in arcs):
            continue
        image = OrientedGraph(k, arcs)
        key = canonical_form(image, guard)
        if key not in found:
            found[key] = image
    logger.debug("{:,} independent partitions, {:,} images".format(partitions, len(found)))
    ordered = sorted(found.items(), key=lambda item: (-item[0][1], item[0][2]))
    return ImageSet(g, [image for _, image in ordered], n)
