"""Exception hierarchy.

Every exception carries a short machine-readable ``code`` that the CLI
reports in its ``{"error": code, "detail": ...}`` payload.
"""


class CrtKitError(Exception):
    code = "error"


class InvalidInput(CrtKitError, ValueError):
    code = "invalid_input"


class NotCoprime(CrtKitError, ValueError):
    code = "not_coprime"


class NotPairwiseCoprime(NotCoprime):
    code = "not_pairwise_coprime"

    def __init__(self, a, b, i=None, j=None):
        self.pair = (a, b)
        self.indices = (i, j)
        super().__init__(f"moduli {a} and {b} are not coprime")


class LengthMismatch(CrtKitError, ValueError):
    code = "length_mismatch"


class NonPositiveModulus(CrtKitError, ValueError):
    code = "non_positive_modulus"


class BoundExceeded(CrtKitError, ValueError):
    code = "bound_exceeded"


class FactorBoundExceeded(BoundExceeded):
    code = "factor_bound_exceeded"


class SearchBoundExceeded(BoundExceeded):
    code = "search_bound_exceeded"


class DivisionByZero(CrtKitError, ZeroDivisionError):
    code = "division_by_zero"


class NotASolution(CrtKitError, ValueError):
    code = "not_a_solution"


class OutOfRange(CrtKitError, ValueError):
    code = "out_of_range"


class RingMismatch(CrtKitError, ValueError):
    code = "ring_mismatch"


class FieldMismatch(CrtKitError, ValueError):
    code = "field_mismatch"


class BaseMismatch(CrtKitError, ValueError):
    code = "base_mismatch"


class HypothesisViolated(CrtKitError, ValueError):
    code = "hypothesis_violated"


class NotAPartition(CrtKitError, ValueError):
    code = "not_a_partition"


class InvariantViolation(CrtKitError):
    """An internal consistency check failed; this indicates a bug."""

    code = "invariant_violation"
