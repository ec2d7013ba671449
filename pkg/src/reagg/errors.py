"""Exception hierarchy shared across the package.

Two failure classes are distinguished because the CLI maps them to
different exit codes: bad inputs or configuration (exit 2) versus
numerical breakdown during an otherwise valid computation (exit 3).
"""


class ReaggError(Exception):
    """Base class for all package errors."""


class ValidationError(ReaggError):
    """Invalid input data, dimensions, or configuration."""


class NumericalError(ReaggError):
    """Numerical failure: non-convergence, singular system, non-finite values."""
