"""Shared exception types."""


class CapacityError(ValueError):
    """An argument exceeds what the supplied sieve (or other resource) covers."""


class SeriesVanishesError(ArithmeticError):
    """A local factor of a singular series is zero or negative.

    Carries the offending prime and factor value so callers can emit a
    0-report instead of a bare failure.
    """

    def __init__(self, prime: int, factor: float):
        self.prime = prime
        self.factor = factor
        super().__init__(
            f"singular series degenerates at p={prime}: local factor {factor}"
        )


class InfeasibleParameters(ValueError):
    """Parameter values violate a precondition of an exponent table."""
