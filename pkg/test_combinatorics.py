"""
test_combinatorics.py

Tests for the enumeration numbers A_V, N_8, gamma, nu and A_O.
"""

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pytest

from xxz_fidelity.combinatorics import a_o, a_o_row, a_v, binom, factorial, gamma, n_8, nu
from xxz_fidelity.errors import ArgumentError


def test_binomials():
    """Test factorials and the zero-outside-range binomial."""
    print("🧪 Testing binomials...")

    assert factorial(0) == 1
    assert factorial(20) == 2432902008176640000
    assert binom(0, 0) == 1
    assert binom(1, 2) == 0
    assert binom(3, -1) == 0
    assert binom(10, 4) == 210
    with pytest.raises(ArgumentError):
        binom(-1, 0)

    print("✅ Binomial tests passed")


def test_product_formulas():
    """Test A_V and N_8 against known values."""
    print("🧪 Testing A_V and N_8...")

    assert [a_v(s) for s in (1, 3, 5, 7, 9)] == [1, 1, 3, 26, 646]
    assert [n_8(s) for s in (2, 4, 6, 8, 10)] == [1, 2, 11, 170, 7429]
    with pytest.raises(ArgumentError):
        a_v(4)
    with pytest.raises(ArgumentError):
        n_8(3)

    print("✅ A_V and N_8 tests passed")


def test_gamma_and_nu():
    """Test the interleaved sequence gamma_N and the exponent nu_N."""
    print("🧪 Testing gamma and nu...")

    assert [gamma(N) for N in range(8)] == [1, 1, 1, 2, 3, 11, 26, 170]
    assert nu(0) == 0
    assert nu(4) == 2
    assert nu(5) == 4
    assert [nu(N) for N in range(1, 8)] == [0, 0, 1, 2, 4, 6, 9]
    with pytest.raises(ArgumentError):
        gamma(-1)

    print("✅ gamma and nu tests passed")


def test_refined_counts():
    """Test the refined off-diagonally-symmetric counts."""
    print("🧪 Testing A_O...")

    for size in (2, 4, 6, 8):
        assert a_o(size, 1) == 0
    assert a_o_row(4) == [0, 1, 1, 1]
    assert a_o(4, 2) == 1

    # row sums reproduce A_V(2n+1)
    for n in range(1, 6):
        assert sum(a_o_row(2 * n)) == a_v(2 * n + 1)

    assert all(v >= 0 for v in a_o_row(12))
    with pytest.raises(ArgumentError):
        a_o(4, 5)
    with pytest.raises(ArgumentError):
        a_o(5, 2)

    print("✅ A_O tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Combinatorics Tests")
    print("=" * 60)
    print()

    try:
        test_binomials()
        print()
        test_product_formulas()
        print()
        test_gamma_and_nu()
        print()
        test_refined_counts()
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
