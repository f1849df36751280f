"""
test_asymptotics.py

Tests for the large-N series, the character prefactor, the CFT prediction
and the finite-size comparison.
"""

import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mpmath
import pytest

from xxz_fidelity import asymptotics as asy
from xxz_fidelity.errors import ArgumentError, IllDefinedError
from xxz_fidelity.numerics import precision


def test_boundary_parameter():
    """Test x(r), its inverse and the coefficients at r = 1."""
    print("🧪 Testing boundary parameterisation...")

    with precision(40):
        eps = mpmath.mpf(10) ** -30
        assert abs(asy.x_from_r(1) - 1) < eps
        assert abs(asy.x_from_r(Fraction(3, 2)) - mpmath.mpf(1) / 2) < eps
        assert abs(asy.x_from_r(Fraction(1, 2)) - 2) < eps
        assert abs(asy.r_from_x(Fraction(1, 2)) - mpmath.mpf(3) / 2) < eps
        assert abs(asy.r_from_x(2) - mpmath.mpf(1) / 2) < eps
        for x in (Fraction(1, 5), Fraction(7, 5), Fraction(9)):
            assert abs(asy.x_from_r(asy.r_from_x(x)) - mpmath.mpf(x.numerator) / x.denominator) < eps

        c = asy.coeffs(1)
        assert c.D == c.K
        assert c.E == 13 and c.E_bar == 11
        assert c.tau2 == 0 and c.tau2_bar == 0

        near = asy.coeffs(1 + mpmath.mpf('1e-4'))
        assert abs(near.D - near.K) < 1e-6

        half = asy.coeffs(Fraction(3, 2))
        assert abs(half.tau2 - mpmath.mpf(5) / 72) < eps
        assert abs(half.E - 6) < eps

    with pytest.raises(ArgumentError):
        asy.x_from_r(2)
    with pytest.raises(ArgumentError):
        asy.r_from_x(-1)
    with pytest.raises(ArgumentError):
        asy.coeffs(0)

    print("✅ Boundary parameterisation tests passed")


def test_series():
    """Test the truncated series and its argument checks."""
    print("🧪 Testing lbf_asymptotic...")

    with precision(40):
        N = 20
        assert abs(asy.lbf_asymptotic(10, 10, Fraction(1, 2), order='log') - mpmath.log(N) / 6) < 1e-30
        for N1, N2 in ((4, 6), (10, 10), (8, 15), (15, 8)):
            assert abs(asy.lbf_susy_asymptotic(N1, N2) - asy.lbf_asymptotic(N1, N2, 1)) < 1e-12

        # odd-even mirrors even-odd at ξ -> 1 - ξ
        left = asy.lbf_asymptotic(8, 15, Fraction(2))
        right = asy.lbf_asymptotic(15, 8, Fraction(2))
        assert abs(left - right) < 1e-30

        direct = asy.lbf_asymptotic(40, 40, Fraction(1, 2))
        assembled = asy.lbf_asymptotic_assembled(40, 40, Fraction(1, 2))
        assert abs(direct - assembled) < 1e-2

    assert asy.parity_case(2, 4) == asy.EVEN_EVEN
    assert asy.parity_case(2, 3) == asy.EVEN_ODD
    assert asy.parity_case(3, 2) == asy.ODD_EVEN
    with pytest.raises(IllDefinedError):
        asy.lbf_asymptotic(3, 5, 1)
    with pytest.raises(ArgumentError):
        asy.lbf_asymptotic(0, 4, 1)
    with pytest.raises(ArgumentError):
        asy.lbf_asymptotic(2, 4, 1, order='2/N')

    print("✅ lbf_asymptotic tests passed")


def test_character_prefactor():
    """Test the two routes to the large-N character prefactor."""
    print("🧪 Testing character prefactor...")

    with precision(40):
        for r in (mpmath.mpf('0.5'), mpmath.mpf('1.5')):
            param = asy.BoundaryParam.from_r(r)
            for N in (1, 10, 40):
                a = asy.character_prefactor(param.theta, N)
                b = asy.character_prefactor_complex(param.z, N)
                assert abs(a - b) / abs(a) < 1e-12
        assert asy.character_prefactor(0, 12) == 1

        param = asy.BoundaryParam.from_x(Fraction(1, 2))
        assert abs(param.r - mpmath.mpf(3) / 2) < 1e-30
        assert abs(abs(param.z) - 1) < 1e-30

        z = mpmath.mpf('0.7') * mpmath.expjpi(mpmath.mpf(1) / 5)
        assert asy.check_ode(2, 'even', z) < 1e-4
        assert asy.check_ode(2, 'odd', z) < 1e-4

    estimate = asy.estimate_tau('even', Fraction(1, 2), N_max=80)
    assert estimate.sizes == list(range(40, 81, 2))
    assert estimate.relative_error < 0.1

    with pytest.raises(ArgumentError):
        asy.estimate_tau('even', Fraction(1, 2), N_max=4)
    with pytest.raises(ArgumentError):
        asy.check_ode(1, 'even', 1)

    print("✅ Character prefactor tests passed")


def test_cft_prediction():
    """Test the free-boson prediction against the lattice profiles."""
    print("🧪 Testing CFT prediction...")

    with precision(40):
        charges = asy.CftCharges.even_even()
        offsets = [asy.cft_f(xi, charges) - mpmath.log(xi * (1 - xi)) / 6
                   for xi in (mpmath.mpf('0.2'), mpmath.mpf('0.5'), mpmath.mpf('0.9'))]
        assert max(offsets) - min(offsets) < 1e-30

        charges = asy.CftCharges.odd_even()
        xi = mpmath.mpf('0.3')
        assert abs(asy.cft_f(xi, charges) - mpmath.log((1 - xi) / xi) / 6) < 1e-30

        for make in (asy.CftCharges.even_even, asy.CftCharges.even_odd, asy.CftCharges.odd_even):
            charges = make()
            assert abs(charges.leading_coefficient() - mpmath.mpf(1) / 6) < 1e-30
            assert abs(asy.cft_g(mpmath.mpf('0.4'), charges)) < 1e-30

        assert asy.CftCharges.for_sizes(3, 4) == asy.CftCharges.odd_even()
        with pytest.raises(ArgumentError):
            asy.CftCharges(1, 1, 1, 1)
        with pytest.raises(ArgumentError):
            asy.cft_f(1, asy.CftCharges.even_even())

    record = asy.energy_expansion_check(6, Fraction(7, 5))
    assert record['passed'] and record['residual'] == 0
    assert asy.energy_expansion_check(5, 1)['E_bndr'] == Fraction(1, 4)

    print("✅ CFT prediction tests passed")


def test_comparison():
    """Test the finite-size comparison sweep."""
    print("🧪 Testing compare_finite_size...")

    assert len(asy.comparison_sizes(72)) == 35
    assert len(asy.comparison_sizes(73)) == 36
    assert asy.comparison_sizes(8) == [2, 4, 6]
    with pytest.raises(ArgumentError):
        asy.comparison_sizes(2)

    with precision(40):
        table = asy.compare_finite_size(24, Fraction(1, 2))
        assert [row['N1'] for row in table.rows] == asy.comparison_sizes(24)
        assert set(table.rows[0]) == set(asy.COMPARISON_COLUMNS)
        assert table.interior_max_diff <= table.max_diff
        for row in table.rows:
            assert row['N1'] + row['N2'] == 24
            assert abs(row['diff'] - (row['F_exact'] - row['F_asymp'])) < 1e-30
        assert table.within(table.max_diff)

        short = asy.compare_finite_size(10, Fraction(1, 2))
        assert short.interior_max_diff is None
        assert not short.within(1.0, 1.0), "A sweep without interior rows should not pass"

        # N2 = 1 is the worst edge row and exceeds the interior tolerance
        odd = asy.compare_finite_size(73, Fraction(1, 2))
        worst = max(odd.rows, key=lambda row: abs(row['diff']))
        assert worst['N1'] == 72
        assert 5e-3 < odd.max_diff < 1e-2
        assert odd.interior_max_diff < 1e-3
        assert odd.within(5e-3, 5e-2)

    print("✅ compare_finite_size tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Asymptotics Tests")
    print("=" * 60)
    print()

    try:
        test_boundary_parameter()
        print()
        test_series()
        print()
        test_character_prefactor()
        print()
        test_cft_prediction()
        print()
        test_comparison()
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
