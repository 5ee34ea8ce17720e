"""Exception types raised by entclass."""


class EntclassError(Exception):
    """Base class for all library errors."""


class InvalidIndexError(EntclassError, ValueError):
    """A Pauli index digit lies outside {0, 1, 2, 3}."""


class ValidationError(EntclassError, ValueError):
    """Input matrix or coefficient vector fails a structural check."""


class CapabilityError(EntclassError):
    """The requested operation has no closed form for this qubit count."""


class BudgetExceededError(EntclassError):
    """A monomial space is larger than the configured size budget."""

    def __init__(self, requested, budget):
        self.requested = requested
        self.budget = budget
        super().__init__(
            f"monomial space of dimension {requested} exceeds budget {budget}"
        )
