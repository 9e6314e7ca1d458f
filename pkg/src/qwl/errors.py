"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the range an operation supports."""


class BudgetError(DomainError):
    """An exhaustive operation was refused because the instance exceeds its vertex budget."""


class GraphConstructionError(ValueError):
    """An edge list cannot form a valid graph (self-loop, label out of range, malformed input)."""


class UnreachableVertexError(ValueError):
    """Two vertices have no connecting path."""


class VerificationError(RuntimeError):
    """A cut family failed verification, or an internal consistency check broke."""
