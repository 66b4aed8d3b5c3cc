"""Exception and warning types raised by the package."""


class MLambdaError(Exception):
    """Base class for all package errors."""


class NonpositiveSupport(MLambdaError, ValueError):
    """A demand variable has left support endpoint r1 <= 0, so 1/D is undefined."""


class EmptySample(MLambdaError, ValueError):
    pass


class ParseError(MLambdaError, ValueError):
    """Malformed samples CSV. Carries the 1-based row and column when known."""

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ConfigError(MLambdaError, ValueError):
    pass


class ZeroRevenueWarning(UserWarning):
    """Item has d = 0; the optimal order is the boundary point x* = 0."""


class NonpositiveFitWarning(UserWarning):
    """A fitted trapezoid has r1 = P5 <= 0 and cannot be used for E(1/D)."""
