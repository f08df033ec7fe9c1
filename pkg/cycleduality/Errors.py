"""
Errors.py
====================================
Exceptions raised across the cycleduality package.
"""


class GraphValidationError(ValueError):
    """
    Raised when a graph or walk violates a structural precondition (loops, vertex range,
    antisymmetry, not a path, not connected, ...). The message names the violated rule.
    """
    pass


class GraphFormatError(GraphValidationError):
    """
    Raised when the text graph format cannot be parsed. Carries the offending line number.
    """

    def __init__(self, message: str, line: int = None):
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)
        self._line = line

    @property
    def line(self):
        return self._line


class EmptyPatternError(GraphValidationError):
    """
    Raised when the pattern of a walk with a single vertex is requested.
    """
    pass


class ResourceGuardError(Exception):
    """
    Raised when a brute-force routine is asked to work on inputs beyond its desk-scale guard.
    Every guarded routine accepts a keyword to raise or disable the guard.
    """
    pass


class CertificateError(ValueError):
    """
    Raised when a certificate payload is structurally malformed (missing fields, wrong types).
    A well formed certificate that is simply wrong is reported by `certificate_violations` instead.
    """
    pass


class ContractViolationError(RuntimeError):
    """
    Raised when an internal contract would be broken, e.g. a no-certificate is requested although
    a homomorphism exists. Seeing this exception means there is a bug.
    """
    pass
