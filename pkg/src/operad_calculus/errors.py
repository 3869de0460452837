"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OperadError(Exception):
    """Base class for all errors raised by operad_calculus."""


class IndexOutOfRange(OperadError, IndexError):
    pass


class InstanceMismatch(OperadError):
    pass


class WrongArity(OperadError):
    pass


class NotAMultiplication(OperadError):
    pass


class InvalidRepresentation(OperadError):
    pass


class NotOperatorOfKind(OperadError):
    """Raised when an operator fails the identity its kind requires."""


class MissingWeight(OperadError):
    pass


class MalformedSpec(OperadError):
    pass


class AlphaNotCompatible(OperadError):
    """An element is not a member of the alpha-twisted subspace."""


class ComplexBroken(OperadError):
    """Consecutive coboundary matrices do not compose to zero.

    This signals an implementation bug, never a user error.
    """


class DegreeOutOfRange(OperadError, IndexError):
    pass


class ParseError(OperadError, ValueError):
    pass
