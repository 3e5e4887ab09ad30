"""Exception types shared across the package."""


class EicpError(Exception):
    """Base class for all package errors."""


class InvalidMatrix(EicpError):
    """Matrix input violates a structural requirement (shape, finiteness, symmetry)."""


class InvalidProblem(EicpError):
    """Problem data does not satisfy the constructor's definiteness requirements."""


class InvalidConfig(EicpError):
    """Solver configuration value out of range."""


class InvalidInput(EicpError):
    """Generic bad argument (empty vector, non-finite data, conflicting flags)."""


class EigenFailure(EicpError):
    """Eigensolver failed to reach the off-diagonal tolerance within the sweep cap."""


class UnsupportedFormat(EicpError):
    """Matrix Market file uses a field or symmetry the package does not ingest."""


class ParseError(EicpError):
    """Malformed Matrix Market content; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateIterate(EicpError):
    """An iterate collapsed to zero where a nonzero vector is required."""


class NoDirection(EicpError):
    """Line search called with a zero direction."""


class InfeasibleIterate(EicpError):
    """Step-bound discriminant negative beyond tolerance: iterate left the feasible set."""


class ReductionViolation(EicpError):
    """Mapped SQEiCP solution violates a structural guarantee of the reduction."""


class MaxIterExceeded(EicpError):
    """Iteration cap hit; carries the best iterate found and its residual."""

    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual
