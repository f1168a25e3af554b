"""Exception hierarchy shared by the library and the CLI."""


class QwellError(Exception):
    """Base class for every error raised by qwell_engine."""


class DomainError(QwellError, ValueError):
    """An argument lies outside the domain of an operation."""


class NormalizationError(QwellError, ValueError):
    """Occupation probabilities violate the WellState invariants."""


class LegError(QwellError, ValueError):
    """A process leg is inconsistent with its kind."""


class ParameterError(QwellError, ValueError):
    """Cycle geometry violates a builder precondition."""


class ClosureError(QwellError, ValueError):
    """Consecutive legs of a cycle do not meet at a common vertex."""


class DegenerateCycleError(QwellError, ValueError):
    """A cycle absorbs no heat, so its efficiency is undefined."""


class ConvergenceError(QwellError, ArithmeticError):
    """Adaptive quadrature hit its depth limit before meeting tolerance.

    Attributes
    ----------
    estimate : float
        Best available value of the integral.
    error_bound : float
        Accumulated Richardson error estimate over the unconverged panels.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
