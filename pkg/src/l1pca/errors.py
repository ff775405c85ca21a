"""Exception taxonomy shared across the package.

The CLI maps these onto its exit-code contract: ParameterError -> 1,
DataError -> 2, NumericalError -> 3.
"""


class L1PCAError(Exception):
    """Base class for all package errors."""


class ParameterError(L1PCAError):
    """Invalid argument or violated operation precondition."""


class DataError(L1PCAError):
    """Unreadable, malformed, or degenerate input data."""


class NumericalError(L1PCAError):
    """A numerical routine failed to produce a usable result."""


class DegenerateSpectrumError(NumericalError):
    """Eigenvalue gaps too small for the first-order eigenpair update."""
