"""Semantic exception hierarchy.

Public functions never raise bare ValueError/ArithmeticError; they raise one
of these so callers (and the CLI exit-code mapping) can distinguish bad
numbers from bad arguments from broken invariants.
"""


class NormGapError(Exception):
    """Base error for this package."""


class DomainError(NormGapError, ValueError):
    """A numeric input lies outside the mathematical domain (NaN, pole, ...)."""


class ArgumentError(NormGapError, ValueError):
    """A parameter violates its documented contract (range, shape, format)."""


class RangeError(NormGapError, OverflowError):
    """The exact result overflows double precision."""


class PreconditionError(NormGapError, ValueError):
    """Input fails a stated precondition (e.g. not zero-mean/unit-variance)."""


class InconsistencyError(NormGapError, ValueError):
    """Derived quantities contradict each other (corrupted input)."""


class InternalError(NormGapError, RuntimeError):
    """An internal invariant failed; indicates a bug, not a user error."""
