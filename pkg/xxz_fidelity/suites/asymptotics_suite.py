"""
asymptotics_suite.py

Large-N checks: coefficients at the supersymmetric point, the two routes
to the character prefactor, fitted 1/N coefficients, the differential
equation, the CFT prediction, the energy expansion and the finite-size
comparison sweep.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional
import logging

import mpmath

from .. import asymptotics as asy
from ..numerics import parse_rational
from .base_suite import BaseVerificationSuite

logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-12
TAU_TOLERANCE = 0.02
HALF_INTEGER_TOLERANCE = 1e-2
ODE_TOLERANCE = 1e-4
OVERALL_BOUND = 5e-2

# r = 3/2 and r = 1/2
TAU_POINTS = (Fraction(1, 2), Fraction(2))


def _ode_samples(count: int = 10) -> List[Any]:
    """Points of modulus 0.7 away from the cube roots of unity."""
    return [mpmath.mpf('0.7') * mpmath.expjpi(mpmath.mpf(2 * k + 1) / (2 * count + 1))
            for k in range(count)]


class AsymptoticsSuite(BaseVerificationSuite):
    """Numerical checks of the large-N series at working precision."""

    def __init__(self, suite_name: str = "asymptotics", config: Optional[Dict[str, Any]] = None):
        super().__init__(suite_name, config)
        self.x = Fraction(1, 2)
        self.compare_n = [72, 73]
        self.tolerance = 5e-3
        self.interior_min = 8
        self.tau_n_max = 200
        self.ode_n_max = 20

    def initialize(self) -> bool:
        x = self.config.get('x')
        if x is not None:
            self.x = parse_rational(str(x))
        self.compare_n = [int(n) for n in self.config.get('compare_n', self.compare_n)]
        self.tolerance = float(self.config.get('tolerance', self.tolerance))
        self.interior_min = int(self.config.get('interior_min', self.interior_min))
        self.tau_n_max = int(self.config.get('tau_n_max', self.tau_n_max))
        self.ode_n_max = int(self.config.get('ode_n_max', self.ode_n_max))
        self._initialized = True
        return True

    def run_checks(self) -> None:
        self._supersymmetric_checks()
        self._prefactor_checks()
        for x in TAU_POINTS:
            for parity in ('even', 'odd'):
                self.check(f"τ {parity} class x={x}",
                           lambda x=x, parity=parity: asy.estimate_tau(parity, x, self.tau_n_max),
                           passed=lambda est: est.relative_error < TAU_TOLERANCE)
                self.check(f"no N^(-1/2) term {parity} class x={x}",
                           lambda x=x, parity=parity: asy.fit_half_integer_coefficient(
                               parity, x, self.tau_n_max),
                           passed=lambda c: abs(c) < HALF_INTEGER_TOLERANCE)
        self._ode_checks()
        self._cft_checks()
        for N in range(2, 9):
            for x in (Fraction(1, 2), Fraction(2), Fraction(7, 5)):
                self.check(f"energy expansion N={N} x={x}",
                           lambda N=N, x=x: asy.energy_expansion_check(N, x),
                           passed=lambda r: r['passed'])
        for N in self.compare_n:
            self.check(f"finite-size comparison N={N} x={self.x}",
                       lambda N=N: asy.compare_finite_size(N, self.x, self.interior_min),
                       passed=lambda t: t.within(self.tolerance, OVERALL_BOUND))

    def _supersymmetric_checks(self) -> None:
        c = asy.coeffs(1)
        self.record("coefficients at r=1",
                    c.D == c.K and c.E == 13 and c.E_bar == 11 and c.tau2 == 0 and c.tau2_bar == 0,
                    {'D': c.D, 'E': c.E, 'E_bar': c.E_bar})
        near = asy.coeffs(1 + mpmath.mpf('1e-4'))
        self.record("D continuous at r=1", abs(near.D - near.K) < 1e-6, abs(near.D - near.K))
        for N1, N2 in ((4, 6), (10, 10), (8, 15), (15, 8), (30, 42)):
            diff = abs(asy.lbf_susy_asymptotic(N1, N2) - asy.lbf_asymptotic(N1, N2, 1))
            self.record(f"x=1 series N1={N1} N2={N2}", diff < IDENTITY_TOLERANCE, diff)

    def _prefactor_checks(self) -> None:
        for r in (mpmath.mpf('0.5'), mpmath.mpf('0.8'), mpmath.mpf('1.5')):
            param = asy.BoundaryParam.from_r(r)
            for N in (1, 10, 40):
                a = asy.character_prefactor(param.theta, N)
                b = asy.character_prefactor_complex(param.z, N)
                diff = abs(a - b) / abs(a)
                self.record(f"prefactor routes r={mpmath.nstr(r, 3)} N={N}",
                            diff < IDENTITY_TOLERANCE, diff)
            z32 = mpmath.power(param.z, mpmath.mpf(3) / 2)
            lhs = (z32 - 1) ** 2 / z32
            rhs = -4 * mpmath.sin(3 * param.theta / 4) ** 2
            self.record(f"prefactor trigonometric form r={mpmath.nstr(r, 3)}",
                        abs(lhs - rhs) < IDENTITY_TOLERANCE, abs(lhs - rhs))

    def _ode_checks(self) -> None:
        samples = _ode_samples()
        for parity in ('even', 'odd'):
            for n in range(1, self.ode_n_max + 1):
                worst = max(asy.check_ode(n, parity, z) for z in samples)
                self.record(f"differential equation {parity} n={n}", worst < ODE_TOLERANCE, worst)

    def _cft_checks(self) -> None:
        grid = [mpmath.mpf(k) / 100 for k in range(1, 100)]
        profiles = {
            asy.EVEN_EVEN: (asy.CftCharges.even_even(), lambda xi: mpmath.log(xi * (1 - xi)) / 6),
            asy.EVEN_ODD: (asy.CftCharges.even_odd(), lambda xi: mpmath.log(xi / (1 - xi)) / 6),
            asy.ODD_EVEN: (asy.CftCharges.odd_even(), lambda xi: mpmath.log((1 - xi) / xi) / 6),
        }
        for case, (charges, profile) in profiles.items():
            offsets = [asy.cft_f(xi, charges) - profile(xi) for xi in grid]
            spread = max(offsets) - min(offsets)
            self.record(f"CFT profile {case}", spread < IDENTITY_TOLERANCE, spread)
            worst_g = max(abs(asy.cft_g(xi, charges)) for xi in grid)
            self.record(f"CFT 1/N log term vanishes {case}", worst_g < IDENTITY_TOLERANCE, worst_g)
            lead = charges.leading_coefficient()
            self.record(f"CFT log coefficient {case}",
                        abs(lead - mpmath.mpf(1) / 6) < IDENTITY_TOLERANCE, lead)
        logger.debug("CFT checks done on %d grid points", len(grid))
