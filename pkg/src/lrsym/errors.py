"""Exception types raised across the package."""


class LRError(ValueError):
    """Base class for precondition failures on combinatorial inputs."""


class ShapeError(LRError):
    """Invalid partition, skew shape, or mismatched shapes."""


class InvalidTableauError(LRError):
    """A filling violates the row/column order conditions."""


class NotYamanouchiError(LRError):
    pass


class NotLRError(LRError):
    pass


class NotCornerError(LRError):
    pass


class NotExtendingError(LRError):
    pass


class InvalidMatrixError(LRError):
    pass


class CFViolation(LRError):
    pass


class RemarkViolation(LRError):
    """The run-offset inequality of the fast conjugation algorithm failed.

    This only happens on corrupt input; a matrix coming from a genuine
    tableau always satisfies it.
    """


class NotStandardError(LRError):
    pass


class PostconditionError(AssertionError):
    """A self-check on an output failed. Always a bug, never bad input."""


class CircuitTypeError(TypeError):
    pass


class UnknownMapError(KeyError):
    pass


class ArityError(ShapeError):
    """A (lambda, mu, nu) triple whose sizes or containments do not match."""
