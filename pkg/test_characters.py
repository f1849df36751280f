"""
test_characters.py

Tests for the double-staircase symplectic character and its binomial
determinant specialisation.
"""

import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mpmath
import pytest

from xxz_fidelity.algebra import ExactScalar, MultiLaurent, OMEGA, poly_det
from xxz_fidelity.characters import (
    EVEN,
    ODD,
    binomial_determinants,
    character_spec,
    check_chi_leading,
    check_chi_reduction,
    chi_homogeneous,
    chi_in_one_variable,
    chi_near_homogeneous,
    chi_ratio,
    chi_specialized,
    chi_width,
    normalized_chi,
    normalized_chi_sequence,
    normalized_chi_x,
    polynomial_matrix,
    x_from_z,
    z_from_x,
)
from xxz_fidelity.errors import ArgumentError
from xxz_fidelity.numerics import precision


def test_definition():
    """Test the determinant-ratio definition on small N."""
    print("🧪 Testing chi_ratio...")

    spec = character_spec(4)
    assert spec.lambdas == (1, 1, 0, 0)
    assert spec.mus == (5, 4, 2, 1)

    assert chi_ratio([]) == 1
    assert chi_ratio([Fraction(2), Fraction(3)]) == 1
    # χ_3 is the defining representation of Sp(6)
    expected = sum(z + 1 / z for z in (Fraction(2), Fraction(3), Fraction(5)))
    assert chi_ratio([2, 3, 5]) == ExactScalar(expected)

    assert chi_homogeneous(3) == 6
    assert chi_homogeneous(4) == 27

    with pytest.raises(ArgumentError):
        chi_ratio([2, 2])
    with pytest.raises(ArgumentError):
        chi_ratio([2, Fraction(1, 2)])
    with pytest.raises(ArgumentError):
        chi_ratio([1, 3])

    print("✅ chi_ratio tests passed")


def test_identities():
    """Test the reduction and leading-term relations and the degree width."""
    print("🧪 Testing character identities...")

    assert check_chi_reduction(3, [2, 3, 5], 0, 1) == 0
    assert check_chi_reduction(4, [2, 3, 5, Fraction(7, 2)], 2, 0) == 0

    with precision(40):
        assert check_chi_leading(4, 0, magnitude=10 ** 9, seed=3) < 1e-6
        assert abs(chi_near_homogeneous(3) / chi_homogeneous(3) - 1) < 1e-6

    z = MultiLaurent.variable(1, 0)
    others = Fraction(2) + Fraction(1, 2) + Fraction(3) + Fraction(1, 3)
    assert chi_in_one_variable(3) == z + z ** -1 + MultiLaurent.constant(1, others)
    for N in range(1, 6):
        assert chi_width(N) == 2 * (N - N // 2 - 1)

    with pytest.raises(ArgumentError):
        check_chi_reduction(3, [2, 3, 5], 1, 1)

    print("✅ Character identity tests passed")


def test_specialization():
    """Test the binomial determinant form at (1, …, 1, z)."""
    print("🧪 Testing chi_specialized...")

    x = Fraction(2, 5)
    for N in range(1, 9):
        assert chi_specialized(N, 1) == chi_homogeneous(N)
        assert chi_specialized(N, x) == chi_specialized(N, 1 / x)
        assert chi_specialized(N).at(x) == chi_specialized(N, x)

    for size in range(0, 4):
        for kind in (ODD, EVEN):
            assert poly_det(polynomial_matrix(size, kind))(x) == binomial_determinants(size, kind, x)[size]

    sequence = normalized_chi_sequence(7, x)
    for N in range(8):
        assert sequence[N] == normalized_chi_x(N, x)
    assert normalized_chi_x(5, 1) == 1

    with pytest.raises(ArgumentError):
        chi_specialized(0)

    print("✅ chi_specialized tests passed")


def test_boundary_map():
    """Test the Möbius map between x and z."""
    print("🧪 Testing z_from_x...")

    assert z_from_x(1) == 1
    x = Fraction(2, 5)
    z = z_from_x(x)
    assert z.norm() == 1
    assert x_from_z(z) == x
    assert normalized_chi(6, z) == normalized_chi_x(6, x)

    with precision(30):
        w = z_from_x(mpmath.mpf('0.4'))
        assert abs(abs(w) - 1) < 1e-25

    with pytest.raises(ArgumentError):
        z_from_x(-OMEGA)
    with pytest.raises(ArgumentError):
        x_from_z(OMEGA)

    print("✅ z_from_x tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Character Tests")
    print("=" * 60)
    print()

    try:
        test_definition()
        print()
        test_identities()
        print()
        test_specialization()
        print()
        test_boundary_map()
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
