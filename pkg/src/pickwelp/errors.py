"""Exception hierarchy.

Precondition failures subclass ``PreconditionError`` (itself a ``ValueError``)
so callers such as the CLI can map them to a usage exit code in one place.
"""


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class NotClosed(PreconditionError):
    pass


class NotSimple(PreconditionError):
    pass


class NotPositivelyOriented(PreconditionError):
    pass


class ZeroArea(PreconditionError):
    pass


class NonIntegerVertices(PreconditionError):
    pass


class OutOfBox(PreconditionError):
    pass


class DegenerateEdge(PreconditionError):
    pass


class ZeroLengthEdge(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class DegenerateTriple(PreconditionError):
    pass


class EdgesIntersect(PreconditionError):
    pass


class NonPositiveSide(PreconditionError):
    pass


class DegenerateSample(PreconditionError):
    pass


class ExhaustedRetries(RuntimeError):
    pass


class InternalError(AssertionError):
    """A computed value contradicts a proven identity.

    Raised instead of coercing the value, since it means either a bug here or a
    counterexample to the underlying theorem.
    """
