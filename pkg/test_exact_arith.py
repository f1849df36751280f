"""
test_exact_arith.py

Tests for the exact arithmetic layer: Q(ω) scalars, integer polynomials,
fraction-free determinants and multivariate Laurent polynomials.
"""

import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pytest
import sympy

from xxz_fidelity.algebra import (
    ExactScalar,
    IntPolynomial,
    MultiLaurent,
    OMEGA,
    bareiss_det,
    bracket,
    field_det,
    laurent_substitute,
    leading_minors,
    poly_det,
)
from xxz_fidelity.errors import NonExactDivisionError, UnsupportedSubstitutionError


def test_exact_scalar():
    """Test Q(ω) arithmetic."""
    print("🧪 Testing ExactScalar...")

    assert OMEGA ** 3 == 1
    assert 1 + OMEGA + OMEGA ** 2 == 0
    assert OMEGA.conjugate() == OMEGA ** 2

    z = ExactScalar(2, 1)
    assert z.norm() == 3
    assert z * z.inverse() == 1
    assert z ** -2 * z ** 2 == 1
    assert (Fraction(1, 2) + z) == ExactScalar(Fraction(5, 2), 1)

    assert ExactScalar(Fraction(3, 4)).is_rational
    assert ExactScalar(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError):
        OMEGA.to_fraction()
    with pytest.raises(ZeroDivisionError):
        ExactScalar(1) / 0

    w = OMEGA.to_mp()
    assert abs(w ** 3 - 1) < 1e-14

    print("✅ ExactScalar tests passed")


def test_int_polynomial():
    """Test integer polynomials in x."""
    print("🧪 Testing IntPolynomial...")

    x = IntPolynomial.x()
    p = (x + 1) * (x - 1)
    assert p == IntPolynomial([-1, 0, 1])
    assert p // (x - 1) == x + 1
    with pytest.raises(NonExactDivisionError):
        (x * x + 1) // (x - 1)

    q = IntPolynomial([2, 2, 3, 2, 2])
    assert q.degree == 4
    assert q.is_palindromic()
    assert not (x + 2).is_palindromic()
    assert IntPolynomial([1, 0]).is_palindromic(2) is False
    assert IntPolynomial([0, 1]).is_palindromic(2)

    assert q(1) == 11
    assert q(Fraction(1, 2)) == Fraction(2 + 1 + Fraction(3, 4) + Fraction(1, 4) + Fraction(1, 8))
    assert str(x * x + 1) == "x^2 + 1"
    assert str(IntPolynomial([2, -3, 0, 1])) == "x^3 - 3*x + 2"

    print("✅ IntPolynomial tests passed")


def test_determinants():
    """Test Bareiss, leading minors and field determinants against sympy."""
    print("🧪 Testing determinants...")

    matrix = [[2, -1, 0, 3], [1, 4, -2, 0], [0, 5, 1, -1], [3, 0, 2, 2]]
    expected = int(sympy.Matrix(matrix).det())
    assert bareiss_det(matrix) == expected
    assert field_det([[Fraction(v) for v in row] for row in matrix]) == expected

    minors = leading_minors(matrix)
    for k in range(1, 5):
        block = sympy.Matrix([row[:k] for row in matrix[:k]])
        assert minors[k - 1] == int(block.det())

    # zero pivot in the first column needs a row swap
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([]) == 1

    x = IntPolynomial.x()
    det = poly_det([[x, 1], [1, x]])
    assert det == x * x - 1

    print("✅ Determinant tests passed")


def test_multi_laurent():
    """Test sparse Laurent polynomials."""
    print("🧪 Testing MultiLaurent...")

    a = MultiLaurent.variable(2, 0)
    b = MultiLaurent.variable(2, 1)
    one = MultiLaurent.constant(2)

    assert a * a.inverse_monomial() == one
    p = (a + b) * (a - b)
    assert p == a ** 2 - b ** 2
    assert p.exact_divide(a - b, 0) == a + b
    with pytest.raises(NonExactDivisionError):
        (a ** 2 + b).exact_divide(a - b, 0)

    c = bracket(a)
    assert c == a - a ** -1
    assert c.width(0) == 2
    assert c.is_centred(0)
    assert (a ** 3 + a ** -1).degree_range(0) == (-1, 3)

    swapped = (a ** 2 * b).swap(0, 1)
    assert swapped == a * b ** 2

    image = (a * b ** -1).substitute_monomials({0: b, 1: a})
    assert image == b * a ** -1
    with pytest.raises(UnsupportedSubstitutionError):
        a.substitute_monomials({0: a + b})

    assert laurent_substitute(a ** 2, 0, a + b) == (a + b) ** 2
    with pytest.raises(UnsupportedSubstitutionError):
        laurent_substitute(a ** -1, 0, a + b)

    value = (a ** 2 + OMEGA * b).evaluate([Fraction(1, 2), 3])
    assert value == ExactScalar(Fraction(1, 4)) + 3 * OMEGA

    z = MultiLaurent.variable(1, 0)
    assert (z ** 2 - z ** -2) // (z - z ** -1) == z + z ** -1

    print("✅ MultiLaurent tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Exact Arithmetic Tests")
    print("=" * 60)
    print()

    try:
        test_exact_scalar()
        print()
        test_int_polynomial()
        print()
        test_determinants()
        print()
        test_multi_laurent()
        print()
        print("=" * 60)
        print("✨ All tests passed! ✨")
        print("=" * 60)
        return True
    except AssertionError as e:
        print(f"❌ Test failed: {e}")
        return False
    except Exception as e:
        print(f"❌ Error during testing: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
