"""Exception hierarchy shared by the whole package.

The four mid-level classes map one-to-one onto the CLI exit codes
(parse=2, capacity=3, budget=4, precondition=5).
"""


class RainbowDomError(Exception):
    """Base class for all package errors."""


class ParseError(RainbowDomError):
    """Malformed external input: graph6 text, edge-list text, labeling text."""


class CapacityError(RainbowDomError):
    """An input exceeds a hard size cap (solver vertex cap, enumeration cap)."""


class BudgetError(RainbowDomError):
    """A search exhausted its branch-node budget before finishing."""


class CapExceededError(RainbowDomError):
    """An enumeration was truncated at its cap; results seen so far are partial."""


class PreconditionError(RainbowDomError, ValueError):
    """An argument violates a documented precondition."""


class IsolatedVertexError(PreconditionError):
    """Total domination style operations require a graph without isolated vertices."""


class DisconnectedError(PreconditionError):
    """An operation that assumes a connected graph received a disconnected one."""


class NoPairWitnessError(PreconditionError):
    """The supplied H (or vertex pair) lacks the required minimum 2-RDF shape."""


class NoUniversalVertexError(PreconditionError):
    """The second factor has no vertex adjacent to all others."""


class NotDisjointError(PreconditionError):
    """The two vertex sets of a couple overlap."""


class NotDominatingCoupleError(PreconditionError):
    """The supplied (A, B) pair is not a dominating couple of G."""


class HTooSmallError(PreconditionError):
    """The second factor has fewer vertices than the number of colors."""
