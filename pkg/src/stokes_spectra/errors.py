"""Exception hierarchy.

Every error carries enough context (the offending argument) to be
reported as machine-readable JSON by the command-line tool.
"""


class StokesSpectraError(Exception):
    """Base class for all library errors."""

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context


class DomainError(StokesSpectraError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(StokesSpectraError, ArithmeticError):
    """An iterative or adaptive procedure exhausted its budget."""


class SingularCoefficientError(StokesSpectraError, ArithmeticError):
    """The lower boundary value of the dispersion function vanished."""


class BoundaryIndeterminate(StokesSpectraError):
    """The frequency is too close to the index jump to classify."""


class UnwrapError(StokesSpectraError, ArithmeticError):
    """The traced argument increment is not close to a multiple of 2*pi."""


class NoDiscreteSpectrum(StokesSpectraError):
    """The dispersion function has no zeros off the real axis."""


class GridError(StokesSpectraError, ValueError):
    """A quadrature grid is malformed or unusable for the requested evaluation."""
