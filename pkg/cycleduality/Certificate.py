"""
Certificate.py
====================================
Yes- and no-certificates for "G -> AC_n" and their independent verification.

A yes-certificate is a mapping of the vertices of G to a_0..a_{n-1}. A no-certificate is a
semi-walk in G following the pattern of Q_l. For odd n the walk has even l with
4 <= l <= n+1, for even n it has odd l with 3 <= l <= n+1.

JSON layout::

    {"verdict": "yes", "n": 5, "mapping": [0, 1, 2]}
    {"verdict": "no", "n": 5, "walk": [3, 0, 1, 2], "directions": "FFF", "l": 4}
"""
from enum import Enum
from typing import List, Optional, Sequence, Tuple
import json

from .Digraph import Digraph
from .Errors import CertificateError, GraphValidationError
from .Families import make_ac_cycle, q_pattern
from .SemiWalk import SemiWalk


class Verdict(Enum):
    YES = 'yes'
    NO = 'no'


class Certificate:
    """
    The answer of the AC decider together with its proof.
    """

    def __init__(self, verdict: Verdict, n: int, mapping: Optional[Sequence[int]] = None,
                 walk: Optional[SemiWalk] = None, l: Optional[int] = None, covers: Tuple = ()):
        """Constructor method

        :param verdict: Verdict.YES or Verdict.NO
        :type verdict: Verdict
        :param n: the AC_n parameter
        :type n: int
        :param mapping: yes payload, mapping[v] is the index of the AC_n vertex v is sent to
        :type mapping: sequence of int
        :param walk: no payload, a semi-walk following the pattern of Q_l
        :type walk: SemiWalk
        :param l: no payload, the order of the Q path whose pattern the walk follows
        :type l: int
        :param covers: the cyclic covers the yes payload was read from, if any
        :type covers: tuple of CyclicCover
        """
        if not isinstance(verdict, Verdict):
            raise CertificateError("verdict must be a Verdict, got {!r}".format(verdict))
        if verdict is Verdict.YES and mapping is None:
            raise CertificateError("a yes-certificate needs a mapping")
        if verdict is Verdict.NO and (walk is None or l is None):
            raise CertificateError("a no-certificate needs a walk and l")
        self._verdict = verdict
        self._n = n
        self._mapping = tuple(mapping) if mapping is not None else None
        self._walk = walk
        self._l = l
        self._covers = tuple(covers)

    @property
    def verdict(self) -> Verdict:
        return self._verdict

    @property
    def n(self) -> int:
        return self._n

    @property
    def mapping(self) -> Optional[Tuple[int, ...]]:
        return self._mapping

    @property
    def walk(self) -> Optional[SemiWalk]:
        return self._walk

    @property
    def l(self) -> Optional[int]:
        return self._l

    @property
    def covers(self) -> Tuple:
        return self._covers

    @property
    def is_yes(self) -> bool:
        return self._verdict is Verdict.YES

    def to_dict(self) -> dict:
        if self.is_yes:
            return {"verdict": self._verdict.value, "n": self._n, "mapping": list(self._mapping)}
        return {"verdict": self._verdict.value, "n": self._n, "walk": list(self._walk.vertices),
                "directions": str(self._walk.directions), "l": self._l}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, payload: dict) -> "Certificate":
        """
        :raises CertificateError: if fields are missing or have the wrong type
        """
        if not isinstance(payload, dict):
            raise CertificateError("certificate must be a JSON object")
        try:
            verdict = Verdict(payload["verdict"])
            n = payload["n"]
        except KeyError as e:
            raise CertificateError("certificate misses the field {}".format(e))
        except ValueError:
            raise CertificateError("verdict must be 'yes' or 'no', got {!r}".format(payload.get("verdict")))
        if not isinstance(n, int) or isinstance(n, bool):
            raise CertificateError("n must be an integer, got {!r}".format(n))
        if verdict is Verdict.YES:
            mapping = payload.get("mapping")
            if not isinstance(mapping, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in mapping):
                raise CertificateError("mapping must be a list of integers")
            return cls(verdict, n, mapping=mapping)
        vertices = payload.get("walk")
        directions = payload.get("directions")
        l = payload.get("l")
        if not isinstance(vertices, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in vertices):
            raise CertificateError("walk must be a list of integers")
        if not isinstance(directions, str):
            raise CertificateError("directions must be a string over F and B")
        if not isinstance(l, int) or isinstance(l, bool):
            raise CertificateError("l must be an integer, got {!r}".format(l))
        try:
            walk = SemiWalk(vertices, directions)
        except GraphValidationError as e:
            raise CertificateError("malformed walk: {}".format(e))
        return cls(verdict, n, walk=walk, l=l)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise CertificateError("certificate is not valid JSON: {}".format(e))
        return cls.from_dict(payload)

    def __repr__(self):
        if self.is_yes:
            return "Certificate(yes, n={}, mapping={})".format(self._n, list(self._mapping))
        return "Certificate(no, n={}, l={}, walk={})".format(self._n, self._l, self._walk)


def admissible_lengths(n: int) -> List[int]:
    """the values of l a no-certificate for AC_n may use"""
    if n % 2 == 1:
        return list(range(4, n + 2, 2))
    return list(range(3, n + 2, 2))


def certificate_violations(g: Digraph, n: int, cert: Certificate) -> List[str]:
    """
    Checks a certificate against g from scratch and lists every violated condition.
    An empty list means the certificate is valid.
    """
    if n < 3:
        return ["n must be at least 3, got {}".format(n)]
    if cert.n != n:
        return ["certificate was issued for n = {}, not {}".format(cert.n, n)]
    problems = []
    if cert.is_yes:
        mapping = cert.mapping
        if len(mapping) != g.order:
            return ["mapping has {} entries for {} vertices".format(len(mapping), g.order)]
        for v, x in enumerate(mapping):
            if x < 0 or x >= n:
                problems.append("vertex {} is sent to {} outside AC_{}".format(v, x, n))
        if problems:
            return problems
        target = make_ac_cycle(n)
        for (u, v) in g.arcs:
            if not target.has_arc(mapping[u], mapping[v]):
                problems.append("arc ({}, {}) is sent to the non-arc ({}, {})".format(u, v, mapping[u], mapping[v]))
        return problems

    l = cert.l
    if l not in admissible_lengths(n):
        problems.append("l = {} is not admissible for n = {} (allowed {})".format(l, n, admissible_lengths(n)))
        return problems
    walk = cert.walk
    if len(walk) != l:
        problems.append("walk has {} vertices, Q_{} has {}".format(len(walk), l, l))
    if walk.directions != q_pattern(l):
        problems.append("walk pattern {} differs from the pattern {} of Q_{}".format(walk.directions, q_pattern(l), l))
    problems.extend(walk.violations(g))
    return problems


def verify_certificate(g: Digraph, n: int, cert: Certificate) -> bool:
    return len(certificate_violations(g, n, cert)) == 0
