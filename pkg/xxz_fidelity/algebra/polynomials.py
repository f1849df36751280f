"""
polynomials.py

Dense univariate integer polynomials in x and exact determinants.

Determinants over integral domains use fraction-free Bareiss elimination,
so every intermediate division is exact; determinants over fields use
plain Gaussian elimination with a nonzero-pivot search.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from ..errors import ConsistencyError, NonExactDivisionError
from .scalars import ExactScalar


class IntPolynomial:
    """
    Polynomial in x with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of x^k; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, value: int) -> 'IntPolynomial':
        return cls([value])

    @classmethod
    def x(cls) -> 'IntPolynomial':
        return cls([0, 1])

    @staticmethod
    def coerce(value: Any) -> 'IntPolynomial':
        if isinstance(value, IntPolynomial):
            return value
        if isinstance(value, int):
            return IntPolynomial([value])
        raise TypeError(f"cannot convert {type(value).__name__} to IntPolynomial")

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_palindromic(self, degree: int = None) -> bool:
        """
        Check x^d·p(1/x) = p(x).

        Args:
            degree: Reflection degree d (defaults to the actual degree)
        """
        d = self.degree if degree is None else degree
        if self.is_zero():
            return True
        if self.degree > d:
            return False
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return padded == padded[::-1]

    def __call__(self, value: Any) -> Any:
        """Horner evaluation at an int, Fraction, ExactScalar or mpmath number."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __add__(self, other: Any) -> 'IntPolynomial':
        try:
            o = IntPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return IntPolynomial(u + v for u, v in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> 'IntPolynomial':
        try:
            o = IntPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> 'IntPolynomial':
        return (-self) + other

    def __mul__(self, other: Any) -> 'IntPolynomial':
        try:
            o = IntPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(o.coeffs):
                    out[i + j] += u * v
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'IntPolynomial':
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = IntPolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __floordiv__(self, other: Any) -> 'IntPolynomial':
        """
        Exact division over the integers.

        Raises:
            ZeroDivisionError: If the divisor is zero
            NonExactDivisionError: If a remainder is left
        """
        try:
            d = IntPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        lead = d.coeffs[-1]
        if len(rem) - 1 < dd:
            if rem:
                raise NonExactDivisionError(f"{d} does not divide {self}")
            return IntPolynomial()
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise NonExactDivisionError(f"{d} does not divide {self}")
            quot[k - dd] = q
            for j, v in enumerate(d.coeffs):
                rem[k - dd + j] -= q * v
        if any(rem):
            raise NonExactDivisionError(f"{d} does not divide {self}")
        return IntPolynomial(quot)

    def __eq__(self, other: Any) -> bool:
        try:
            o = IntPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = '-' if c < 0 else '+'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def bareiss_det(matrix: Sequence[Sequence[Any]], one: Any = 1) -> Any:
    """
    Fraction-free determinant over an integral domain.

    Elements must support ``*``, ``-`` and exact ``//``; zero pivots are
    handled by a row search, and a column without pivot gives 0.

    Args:
        matrix: Square matrix as a sequence of rows
        one: Multiplicative identity of the ring (used for size 0)

    Returns:
        The determinant as a ring element
    """
    n = len(matrix)
    if n == 0:
        return one
    zero = one - one
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("bareiss_det requires a square matrix")
    negate = False
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            negate = not negate
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if negate else det


def leading_minors(matrix: Sequence[Sequence[Any]]) -> List[Any]:
    """
    All leading principal minors from a single Bareiss sweep.

    ``result[k]`` is the determinant of the upper-left (k+1)×(k+1) block.
    Without pivoting the k-th Bareiss pivot equals that minor. Ring entries
    (int, IntPolynomial) divide with ``//``, field entries with ``/``.

    Raises:
        ConsistencyError: If a leading minor vanishes before the last one
    """
    n = len(matrix)
    m = [list(row) for row in matrix]
    minors: List[Any] = []
    if n == 0:
        return minors
    ring = isinstance(m[0][0], (int, IntPolynomial))
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        minors.append(pivot)
        if k == n - 1:
            break
        if not pivot:
            raise ConsistencyError(f"leading minor of order {k + 1} vanishes")
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                value = pivot * row_i[j] - lead * row_k[j]
                row_i[j] = value // prev if ring else value / prev
        prev = pivot
    return minors


def poly_det(matrix: Sequence[Sequence[Any]]) -> IntPolynomial:
    """
    Determinant of a square matrix of IntPolynomial (ints are promoted).

    Returns:
        IntPolynomial; the constant 1 for the empty matrix
    """
    rows = [[IntPolynomial.coerce(v) for v in row] for row in matrix]
    return bareiss_det(rows, one=IntPolynomial([1]))


def field_det(matrix: Sequence[Sequence[Any]], one: Any = 1) -> Any:
    """
    Determinant over a field (Fraction, ExactScalar, mpmath numbers).

    Gaussian elimination picks the first nonzero pivot in each column;
    for floating entries the pivot with the largest modulus is taken.
    """
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    det = one
    floating = not _is_exact(m[0][0])
    for k in range(n):
        if floating:
            piv = max(range(k, n), key=lambda r: abs(m[r][k]))
            if not m[piv][k]:
                return det - det
        else:
            piv = next((r for r in range(k, n) if m[r][k] != 0), None)
            if piv is None:
                return det - det
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        pivot = m[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor != 0:
                for j in range(k + 1, n):
                    m[i][j] = m[i][j] - factor * m[k][j]
    return det


def _is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction, ExactScalar))
