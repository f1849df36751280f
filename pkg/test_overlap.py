"""
test_overlap.py

Tests for overlaps and the logarithmic bipartite fidelity: the contraction
oracle against the determinant formula, the x = 1 closed form and the
character split.
"""

import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mpmath
import pytest

from xxz_fidelity.algebra import IntPolynomial
from xxz_fidelity.errors import ArgumentError, IllDefinedError
from xxz_fidelity.numerics import precision
from xxz_fidelity.overlap import (
    ao_polynomial,
    certified_ground_state,
    check_ao_identity,
    compare_routes,
    determinant_sweep,
    lbf,
    lbf_from_characters,
    lbf_susy_exact,
    lbf_sweep,
    overlap_contract,
    overlap_determinant,
    overlap_from_characters,
    overlap_sweep,
)


def test_overlap_polynomials():
    """Test symbolic overlaps for small sizes."""
    print("🧪 Testing overlap polynomials...")

    assert overlap_determinant(2, 0).polynomial == IntPolynomial([1, 0, 1])
    assert overlap_determinant(2, 1).polynomial == IntPolynomial([1, 1, 1])
    assert overlap_determinant(2, 2).polynomial == IntPolynomial([2, 2, 3, 2, 2])

    odd = overlap_determinant(1, 1, Fraction(1, 2))
    assert odd.vanishes and odd.value == 0

    assert determinant_sweep(4, 1) == [1, 1, 2, 3, 11]
    with pytest.raises(ArgumentError):
        overlap_determinant(-1, 2)

    print("✅ Overlap polynomial tests passed")


def test_contraction_oracle():
    """Test the contraction route against the determinant route."""
    print("🧪 Testing contraction oracle...")

    x = Fraction(2, 5)
    assert overlap_contract(2, 1, x).value == x * x + x + 1
    assert overlap_contract(2, 0, x).value == x * x + 1
    assert overlap_contract(1, 1, x).value == 0

    for N in range(1, 7):
        for N1 in range(N + 1):
            for x in (Fraction(1, 3), Fraction(2)):
                record = compare_routes(N1, N - N1, x)
                assert record['abs_equal'], record
                if N1 % 2 == 0 or (N - N1) % 2 == 0:
                    assert record['lbf_equal'], record
                    assert record['positive'], record

    assert certified_ground_state(3, Fraction(1, 2)) is certified_ground_state(3, Fraction(1, 2))

    print("✅ Contraction oracle tests passed")


def test_fidelity_values():
    """Test LBF values and their closed forms."""
    print("🧪 Testing LBF values...")

    with precision(60):
        F = lbf(2, 2, 1)
        assert F.ratio == Fraction(121, 132)
        assert abs(F.value - mpmath.log(mpmath.mpf(132) / 121)) < mpmath.mpf(10) ** -50
        assert abs(lbf(2, 1, 1).value - mpmath.log(mpmath.mpf(4) / 3)) < mpmath.mpf(10) ** -50

        assert lbf(2, 4, Fraction(1, 2), route='contraction').ratio == \
            lbf(2, 4, Fraction(1, 2)).ratio

        for N1, N2 in ((2, 2), (4, 3), (3, 6), (6, 6)):
            assert abs(lbf_susy_exact(N1, N2) - lbf(N1, N2, 1).value) < mpmath.mpf(10) ** -50
            for x in (Fraction(1, 2), Fraction(2), Fraction(7, 5)):
                diff = lbf_from_characters(N1, N2, x) - lbf(N1, N2, x).value
                assert abs(diff) < mpmath.mpf(10) ** -50
                assert overlap_from_characters(N1, N2, x) == overlap_determinant(N1, N2, x).value

        sweep = lbf_sweep(8, Fraction(7, 5))
        assert 1 not in sweep and 3 not in sweep
        assert abs(sweep[2] - lbf(2, 6, Fraction(7, 5)).value) < mpmath.mpf(10) ** -50
        assert overlap_sweep(6, Fraction(1, 3))[2] == overlap_determinant(2, 4, Fraction(1, 3)).value

    with pytest.raises(IllDefinedError):
        lbf(1, 1, 1)
    with pytest.raises(ArgumentError):
        lbf(2, 2, 0)
    with pytest.raises(ArgumentError):
        lbf(2, 2, 1, route='other')

    print("✅ LBF value tests passed")


def test_refined_count_expansion():
    """Test the mixed-parity determinant against the refined counts."""
    print("🧪 Testing A_O expansion...")

    assert ao_polynomial(1) == IntPolynomial([1, 1, 1])
    for n in range(1, 5):
        assert check_ao_identity(n)

    print("✅ A_O expansion tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Overlap Tests")
    print("=" * 60)
    print()

    try:
        test_overlap_polynomials()
        print()
        test_contraction_oracle()
        print()
        test_fidelity_values()
        print()
        test_refined_count_expansion()
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
