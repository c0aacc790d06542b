"""Exception types shared across the library."""


class InvalidInput(ValueError):
    """An argument lies outside the domain of the requested operation."""


class NotQuasiSmoothAtVertex(Exception):
    """A coordinate point of the general member admits no tangent monomial.

    The local vertex analysis needs a monomial of the form x_i^a * x_j in a
    general equation; when none exists the germ at that point is not a plain
    cyclic quotient and the model refuses to guess.
    """

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(message)


class VerificationFailure(Exception):
    """A reproduction check found a field that does not match its target."""

    def __init__(self, field: str, expected, actual):
        self.field = field
        self.expected = expected
        self.actual = actual
        super().__init__(f"{field}: expected {expected!r}, got {actual!r}")


class HypothesisNotMet(Exception):
    """An instance fails a filter required before a bound can be applied."""

    def __init__(self, failed_filter: str):
        self.failed_filter = failed_filter
        super().__init__(failed_filter)
