"""
GraphFormat.py
====================================
The plain text graph format shared by the command line tools.

::

    # AC_3
    digraph 3
    0 1
    2 1
    2 0

The header is `digraph N` or `graph N`, every further line holds one arc u -> v (or one edge
{u, v}). Everything after `#` is a comment, blank lines are skipped.
"""
from typing import List, Tuple, Union
import logging

from .Digraph import Digraph, OrientedGraph, UndirectedGraph
from .Errors import GraphFormatError

logger = logging.getLogger(__name__)

Graph = Union[Digraph, UndirectedGraph]

_KINDS = ("digraph", "graph")


def _tokens(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].split()
        if content:
            lines.append((number, content))
    return lines


def _integer(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError("expected an integer, got {!r}".format(token), number)


def parse_graph(text: str) -> Graph:
    """
    Parses the text format.

    :param text: the file content
    :type text: str
    :return: an `OrientedGraph` when a digraph has no symmetric pair, a `Digraph` when it has one,
        an `UndirectedGraph` for `graph` headers
    :raises GraphFormatError: naming the offending line
    """
    lines = _tokens(text)
    if not lines:
        raise GraphFormatError("missing header 'digraph N' or 'graph N'")
    number, header = lines[0]
    if len(header) != 2 or header[0] not in _KINDS:
        raise GraphFormatError("expected header 'digraph N' or 'graph N', got {!r}".format(" ".join(header)), number)
    kind = header[0]
    order = _integer(header[1], number)
    if order < 0:
        raise GraphFormatError("order must be non-negative, got {}".format(order), number)
    pairs = []
    for number, content in lines[1:]:
        if len(content) != 2:
            raise GraphFormatError("expected a pair 'u v', got {!r}".format(" ".join(content)), number)
        u, v = (_integer(t, number) for t in content)
        if not (0 <= u < order and 0 <= v < order):
            raise GraphFormatError("pair ({}, {}) has an endpoint outside [0, {})".format(u, v, order), number)
        if u == v:
            raise GraphFormatError("loops are not allowed: ({}, {})".format(u, v), number)
        pairs.append((u, v))
    logger.debug("parsed {} with {:,} vertices and {:,} pairs".format(kind, order, len(pairs)))
    if kind == "graph":
        return UndirectedGraph(order, pairs)
    g = Digraph(order, pairs)
    return OrientedGraph.from_digraph(g) if g.is_oriented() else g


def load_graph(path: str) -> Graph:
    """reads and parses a graph file"""
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def format_graph(g: Graph) -> str:
    """the text format of g, pairs in sorted order, terminated by a newline"""
    if isinstance(g, UndirectedGraph):
        lines = ["graph {}".format(g.order)] + ["{} {}".format(u, v) for (u, v) in g.edges]
    else:
        lines = ["digraph {}".format(g.order)] + ["{} {}".format(u, v) for (u, v) in g.arcs]
    return "\n".join(lines) + "\n"


def dump_graph(g: Graph, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_graph(g))
