"""
scalars.py

Exact scalars of the cyclotomic field Q(ω), ω = e^{2πi/3}.
A rational number is the special case with vanishing ω-part.
"""

from fractions import Fraction
from numbers import Rational
from typing import Any, Union

import mpmath

ScalarLike = Union['ExactScalar', int, Fraction]


class ExactScalar:
    """
    Element a + b·ω of Q(ω) with rational a, b.

    Multiplication reduces with ω² = -1 - ω. Instances are immutable and
    mix freely with ``int`` and ``Fraction`` operands.
    """

    __slots__ = ('a', 'b')

    def __init__(self, a: Any = 0, b: Any = 0):
        """
        Args:
            a: Rational part
            b: Coefficient of ω
        """
        object.__setattr__(self, 'a', a if type(a) is Fraction else Fraction(a))
        object.__setattr__(self, 'b', b if type(b) is Fraction else Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def omega(cls) -> 'ExactScalar':
        """The primitive cube root of unity ω."""
        return cls(0, 1)

    @staticmethod
    def coerce(value: Any) -> 'ExactScalar':
        """Convert an int, Fraction or ExactScalar into an ExactScalar."""
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Rational)):
            return ExactScalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactScalar")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_fraction(self) -> Fraction:
        """
        Return the value as a Fraction.

        Raises:
            ValueError: If the ω-part is nonzero
        """
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def to_mp(self) -> Any:
        """Numerical value as mpmath mpf (rational) or mpc, at the current precision."""
        if self.b == 0:
            return mpmath.mpf(self.a.numerator) / self.a.denominator
        a = mpmath.mpf(self.a.numerator) / self.a.denominator
        b = mpmath.mpf(self.b.numerator) / self.b.denominator
        return mpmath.mpc(a - b / 2, b * mpmath.sqrt(3) / 2)

    def conjugate(self) -> 'ExactScalar':
        # ω̄ = ω² = -1 - ω
        return ExactScalar(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm (a + bω)(a + bω̄) = a² - ab + b², never negative."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> 'ExactScalar':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(ω)")
        if self.b == 0:
            return ExactScalar(1 / self.a)
        c = self.conjugate()
        return ExactScalar(c.a / n, c.b / n)

    def __add__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> 'ExactScalar':
        return ExactScalar(-self.a, -self.b)

    def __sub__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return ExactScalar(self.a * o.a)
        bd = self.b * o.b
        return ExactScalar(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> 'ExactScalar':
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> 'ExactScalar':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = ExactScalar(1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"ExactScalar({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}ω"
        sign = '+' if self.b > 0 else '-'
        return f"{self.a}{sign}{abs(self.b)}ω"


OMEGA = ExactScalar.omega()
