"""
Error hierarchy shared by every checker.

All errors derive from ``VerificationError`` (itself a ``ValueError``) so that
callers can separate usage/precondition problems from theorem violations,
which are the only errors that map to exit code 1.
"""


class VerificationError(ValueError):
    """Base class for every error raised by the toolkit."""


class InvalidParameterError(VerificationError):
    """A numeric parameter is out of its documented range."""


class InvalidActionError(VerificationError):
    """The exponent of a semidirect product does not define an action."""


class InvalidElementError(VerificationError):
    """An element index or element specifier does not belong to the group."""


class InvalidVertexError(VerificationError):
    """A vertex index is outside 0..n-1."""


class InvalidGraphError(VerificationError):
    """Edges are inconsistent (duplicate pair with conflicting colours, bad endpoints)."""


class InvalidConnectionSetError(VerificationError):
    """A connection set is not inverse-closed or its colouring is not inverse-invariant."""


class GraphParseError(VerificationError):
    """Malformed graph6, JSON graph or graph specifier."""


class GroupSpecError(VerificationError):
    """Malformed group specification."""


class UnsupportedFeatureError(VerificationError):
    """The operation is not defined for loops or edge colours."""


class PreconditionError(VerificationError):
    """A checker was called on input violating its stated hypotheses."""


class DegreeMismatchError(VerificationError):
    """A permutation acts on a different number of points than the group."""


class RefusalError(VerificationError):
    """The request is outside desk scale (for example brute force on too many vertices)."""


class TheoremViolationError(VerificationError):
    """A checked statement failed on an instance satisfying its hypotheses."""
