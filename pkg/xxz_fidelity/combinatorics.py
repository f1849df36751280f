"""
combinatorics.py

Enumeration numbers behind the overlap formulas: vertically-symmetric
alternating sign matrices A_V, cyclically-symmetric transpose-complement
plane partitions N_8, their interleaving gamma_N, the exponent nu_N and the
refined off-diagonally-symmetric counts A_O.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List
import logging

from .errors import ArgumentError, ConsistencyError

logger = logging.getLogger(__name__)

# Factorial table grows on demand and is shared by every formula here
_FACTORIALS: List[int] = [1]


def factorial(n: int) -> int:
    """Cached exact factorial."""
    if n < 0:
        raise ArgumentError(f"factorial of negative integer {n}")
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def binom(n: int, k: int) -> int:
    """
    Binomial coefficient with the zero-outside-range convention.

    Args:
        n: Top index, n >= 0
        k: Bottom index (any integer)

    Returns:
        C(n, k), or 0 when k < 0 or k > n
    """
    if n < 0:
        raise ArgumentError(f"binomial with negative top index {n}")
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def _as_integer(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{label} is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def a_v(size: int) -> int:
    """
    Number of vertically-symmetric alternating sign matrices of odd size 2k+1.

    A_V(2k+1) = 2^{-k} prod_{i=1}^{k} (6i-2)!(2i-1)! / ((4i-2)!(4i-1)!)
    """
    if size < 1 or size % 2 == 0:
        raise ArgumentError(f"a_v needs an odd size >= 1, got {size}")
    k = (size - 1) // 2
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= Fraction(factorial(6 * i - 2) * factorial(2 * i - 1),
                          factorial(4 * i - 2) * factorial(4 * i - 1))
    numerator = _as_integer(value, f"2^k·A_V({size})")
    if numerator % (2 ** k):
        raise ConsistencyError(f"2^{k} does not divide the A_V({size}) product")
    return numerator // 2 ** k


@lru_cache(maxsize=None)
def n_8(size: int) -> int:
    """
    Number of cyclically-symmetric transpose-complement plane partitions, size 2k.

    N_8(2k) = prod_{i=0}^{k-1} (3i+1)(6i)!(2i)! / ((4i)!(4i+1)!)
    """
    if size < 2 or size % 2:
        raise ArgumentError(f"n_8 needs an even size >= 2, got {size}")
    k = size // 2
    value = Fraction(1)
    for i in range(k):
        value *= Fraction((3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                          factorial(4 * i) * factorial(4 * i + 1))
    return _as_integer(value, f"N_8({size})")


def gamma(N: int) -> int:
    """A_V(N+1) for even N, N_8(N+1) for odd N."""
    if N < 0:
        raise ArgumentError(f"gamma needs N >= 0, got {N}")
    return a_v(N + 1) if N % 2 == 0 else n_8(N + 1)


def nu(N: int) -> int:
    """n(n-1) for N = 2n, n^2 for N = 2n+1."""
    if N < 0:
        raise ArgumentError(f"nu needs N >= 0, got {N}")
    n = N // 2
    return n * (n - 1) if N % 2 == 0 else n * n


@lru_cache(maxsize=None)
def a_o(size: int, i: int) -> int:
    """
    Refined count A_O(2n, i) of off-diagonally-symmetric alternating sign matrices.

    A_O(2n, 1) = 0 and, for i >= 2,
    A_O(2n, i) = A_V(2n-1) sum_{k=1}^{i-1} (-1)^{i+k-1}
                 (2n+k-2)!(4n-k-1)! / ((4n-2)!(k-1)!(2n-k)!)

    Args:
        size: Even matrix size 2n >= 2
        i: Refinement index, 1 <= i <= size
    """
    if size < 2 or size % 2:
        raise ArgumentError(f"a_o needs an even size >= 2, got {size}")
    if not 1 <= i <= size:
        raise ArgumentError(f"a_o index {i} outside 1..{size}")
    if i == 1:
        return 0
    n = size // 2
    total = Fraction(0)
    for k in range(1, i):
        sign = -1 if (i + k - 1) % 2 else 1
        total += sign * Fraction(factorial(2 * n + k - 2) * factorial(4 * n - k - 1),
                                 factorial(4 * n - 2) * factorial(k - 1) * factorial(2 * n - k))
    value = _as_integer(total * a_v(2 * n - 1), f"A_O({size},{i})")
    if value < 0:
        raise ConsistencyError(f"A_O({size},{i}) = {value} is negative")
    return value


def a_o_row(size: int) -> List[int]:
    """[A_O(size, 1), ..., A_O(size, size)]."""
    return [a_o(size, i) for i in range(1, size + 1)]
