"""Exception types with stable machine-readable codes.

The CLI maps these onto exit codes: input problems (parse, spec, shape,
unknown variable) exit 2, resource budgets exit 3.  Verification failures
are reported as results, not exceptions, and exit 4.
"""


class ScrollforgeError(Exception):
    """Base class for all package errors."""

    code = "error"


class RingError(ScrollforgeError):
    code = "ring-error"


class RingMismatchError(RingError):
    code = "ring-mismatch"


class ParseError(ScrollforgeError):
    code = "parse-error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(ParseError):
    code = "unknown-variable"


class ShapeError(ScrollforgeError):
    """A construction was asked for outside its supported shape."""

    code = "shape-error"


class SpecError(ScrollforgeError):
    """Invalid spec document or constructor parameters."""

    code = "spec-error"


class BudgetExceededError(ScrollforgeError):
    """A resource cap tripped; distinct from any mathematical failure."""

    code = "budget-exceeded"

    def __init__(self, message, kind):
        super().__init__(message)
        self.kind = kind
