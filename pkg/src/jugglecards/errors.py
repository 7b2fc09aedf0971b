"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """An enumeration or series computation would exceed the configured budget."""


class InvalidCardError(ValueError):
    """A card violates one of the structural rules."""


class InvalidEmbeddingError(ValueError):
    """An embedding (single-card or sequence) violates its bookkeeping rules."""


class InvalidSequenceError(ValueError):
    """A card sequence is malformed or its cards are incompatible."""


class ProfileMismatchError(ValueError):
    """Arithmetic was attempted between series with different variable profiles."""
