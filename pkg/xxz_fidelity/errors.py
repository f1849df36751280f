"""
errors.py

Exception hierarchy shared by every module of the package.
The CLI maps these classes onto process exit codes.
"""

from typing import Any, List, Optional


class FidelityError(Exception):
    """Base class for all errors raised by xxz_fidelity."""


class ArgumentError(FidelityError, ValueError):
    """A precondition on a user-facing argument is violated."""


class IllDefinedError(ArgumentError):
    """The requested fidelity is ill-defined (both sub-chains of odd length)."""


class UnsupportedError(FidelityError):
    """The request lies outside what the library constructs."""


class UnsupportedSubstitutionError(UnsupportedError):
    """A non-monomial value was substituted into a negative power."""


class NonExactDivisionError(FidelityError, ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


class DegenerateKernelError(FidelityError):
    """
    The kernel of H - E0 is not one-dimensional.

    Attributes:
        dimension: Observed kernel dimension
    """

    def __init__(self, message: str, dimension: int):
        super().__init__(message)
        self.dimension = dimension


class NormalizationError(FidelityError):
    """A vector cannot be normalized because its base component vanishes."""


class ConsistencyError(FidelityError):
    """A runtime certificate of an exact identity failed."""


class NumericalFailure(FidelityError):
    """
    An iterative or fitted numerical procedure did not converge.

    Attributes:
        data: Optional diagnostic sequence (e.g. the fitted values)
    """

    def __init__(self, message: str, data: Optional[List[Any]] = None):
        super().__init__(message)
        self.data = list(data) if data is not None else []
