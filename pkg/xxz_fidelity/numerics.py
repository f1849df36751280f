"""
numerics.py

Floating-point helpers shared by the character and asymptotics modules:
working-precision context, exact-to-mpmath conversion, parsing of exact
rationals from text and Richardson extrapolation.
"""

from contextlib import contextmanager
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Any, Iterator, List, Sequence
import logging

import mpmath

from .algebra import ExactScalar
from .errors import ArgumentError

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 60
MIN_PRECISION = 30


@contextmanager
def precision(digits: int = DEFAULT_PRECISION) -> Iterator[None]:
    """
    Run a block at the given number of decimal digits.

    Raises:
        ArgumentError: If fewer than MIN_PRECISION digits are requested
    """
    if digits < MIN_PRECISION:
        raise ArgumentError(f"precision must be at least {MIN_PRECISION} digits, got {digits}")
    with mpmath.workdps(digits):
        yield


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q", an integer or a decimal string into an exact Fraction.

    Raises:
        ArgumentError: If the text is not a finite rational
    """
    raw = str(text).strip()
    try:
        if '/' in raw:
            num, den = raw.split('/', 1)
            return Fraction(int(num.strip()), int(den.strip()))
        return Fraction(Decimal(raw))
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise ArgumentError(f"not an exact rational: {text!r}")


def format_rational(value: Fraction) -> str:
    """Lossless "p/q" (or "p") representation."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction, ExactScalar))


def to_mp(value: Any) -> Any:
    """Convert int, Fraction or ExactScalar to mpmath at the current precision."""
    if isinstance(value, ExactScalar):
        return value.to_mp()
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, int):
        return mpmath.mpf(value)
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return value
    if isinstance(value, complex):
        return mpmath.mpc(value)
    return mpmath.mpf(value)


def log_ratio(value: Fraction) -> Any:
    """Natural logarithm of a positive exact rational."""
    value = Fraction(value)
    if value <= 0:
        raise ArgumentError(f"logarithm of non-positive value {value}")
    return mpmath.log(mpmath.mpf(value.numerator)) - mpmath.log(mpmath.mpf(value.denominator))


def richardson_extrapolate(base_values: Sequence[Any], p: int, r: float = 2.0) -> Any:
    """
    Richardson extrapolation on a sequence of approximations.

    Entry k is computed with step h0 / r^k and the error expands in
    powers h^p, h^{2p}, ...; each sweep removes one of them.

    Args:
        base_values: Approximations at decreasing step sizes
        p: Order of the leading error term
        r: Step-size reduction factor between successive entries

    Returns:
        The extrapolated value (mpmath number)

    Raises:
        ArgumentError: If fewer than two values are given
    """
    n = len(base_values)
    if n < 2:
        raise ArgumentError("richardson_extrapolate requires at least two base values")
    vals: List[Any] = [to_mp(v) for v in base_values]
    r = mpmath.mpf(r)
    for j in range(1, n):
        factor = r ** (p * j)
        for k in range(n - 1, j - 1, -1):
            vals[k] = (factor * vals[k] - vals[k - 1]) / (factor - 1)
    return vals[-1]
