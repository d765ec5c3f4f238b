"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed user input: out-of-range vertices, non-admissible subsets."""


class ContractError(ValueError):
    """An operation was queried outside its stated precondition."""


class InvariantError(RuntimeError):
    """An internal structural invariant was falsified.

    This is never a recoverable state: it means the model wiring itself is
    wrong, so the computation aborts rather than warns.
    """


class TiltingError(ValueError):
    """Structured rejection of a candidate tilting set.

    reason is a short machine-readable tag, witness carries the offending
    data (a summand, a pair, or a size).
    """

    def __init__(self, reason, witness, message):
        super().__init__(message)
        self.reason = reason
        self.witness = witness


class ResourceCapError(RuntimeError):
    """A sweep would touch more objects than the configured cap allows."""

    def __init__(self, count, cap):
        super().__init__(
            f"refusing to run: {count} indecomposables exceed the cap of {cap}"
        )
        self.count = count
        self.cap = cap
