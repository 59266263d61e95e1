"""Shared exception types."""


class SizeGuardError(RuntimeError):
    """An enumeration would exceed its configured search budget."""


class InputFormatError(ValueError):
    """A JSON payload is structurally malformed."""


class PreconditionError(ValueError):
    """A stated precondition of an operation fails; the message names it."""


class TheoremViolation(RuntimeError):
    """A certified internal invariant failed; indicates a bug, not bad input."""
