"""
character_suite.py

Identities of the double-staircase symplectic character: homogeneous
value, the specialised determinant, the reduction and leading-term
relations, the degree width and x -> 1/x symmetry.
"""

from fractions import Fraction
from typing import Any, Dict, Optional
import random

import mpmath

from ..characters import (
    check_chi_leading,
    check_chi_reduction,
    chi_homogeneous,
    chi_in_one_variable,
    chi_near_homogeneous,
    chi_specialized,
)
from ..combinatorics import gamma, nu
from .base_suite import BaseVerificationSuite

REDUCTION_TOLERANCE = 1e-10
LEADING_TOLERANCE = 1e-5


class CharacterSuite(BaseVerificationSuite):
    """Exact and high-precision checks of χ_N."""

    def __init__(self, suite_name: str = "characters", config: Optional[Dict[str, Any]] = None):
        super().__init__(suite_name, config)
        self.max_n = 20
        self.random_points = 50
        self.reduction_n_max = 8
        self.symbolic_n_max = 9
        self.seed = None

    def initialize(self) -> bool:
        self.max_n = int(self.config.get('max_n', self.max_n))
        self.random_points = int(self.config.get('random_points', self.random_points))
        self.reduction_n_max = int(self.config.get('reduction_n_max', self.reduction_n_max))
        self.symbolic_n_max = int(self.config.get('symbolic_n_max', self.symbolic_n_max))
        self.seed = self.config.get('seed', self.seed)
        self._initialized = True
        return True

    def run_checks(self) -> None:
        for N in range(1, self.max_n + 1):
            self.check(f"χ_{N}(1..1) = 3^ν γ",
                       lambda N=N: chi_homogeneous(N) == 3 ** nu(N) * gamma(N))
            self.check(f"specialised determinant at x=1 N={N}",
                       lambda N=N: chi_specialized(N, 1) == chi_homogeneous(N))

        for N in range(1, self.symbolic_n_max + 1):
            self.check(f"specialised determinant symmetric N={N}",
                       lambda N=N: self._symbolic_matches(N))

        rng = random.Random(self.seed)
        for N in range(2, self.reduction_n_max + 1):
            worst = mpmath.mpf(0)
            for _ in range(self.random_points):
                zs = [mpmath.mpf(1.1 + rng.random()) for _ in range(N)]
                i, j = rng.sample(range(N), 2)
                worst = max(worst, check_chi_reduction(N, zs, i, j))
            self.record(f"reduction N={N}", worst < REDUCTION_TOLERANCE, worst,
                        detail=f"{self.random_points} random points")

        for N in range(1, self.reduction_n_max + 1):
            self.check(f"leading term N={N}",
                       lambda N=N: check_chi_leading(N, 0, seed=rng.randrange(2 ** 31)),
                       passed=lambda r: r < LEADING_TOLERANCE)

        for N in range(1, 6):
            n_bar = N - N // 2
            self.check(f"degree width N={N}",
                       lambda N=N, n_bar=n_bar: self._width_record(N, n_bar),
                       passed=lambda r: r['width'] == r['expected'] and r['centred'])

        for N in range(1, 5):
            self.check(f"coalescence to the homogeneous value N={N}",
                       lambda N=N: abs(chi_near_homogeneous(N) / chi_homogeneous(N) - 1),
                       passed=lambda r: r < 1e-6)

    def _symbolic_matches(self, N: int) -> bool:
        character = chi_specialized(N)
        points = (Fraction(1, 3), Fraction(2), Fraction(7, 5))
        return all(character.at(x) == chi_specialized(N, x) for x in points)

    def _width_record(self, N: int, n_bar: int) -> Dict[str, Any]:
        chi = chi_in_one_variable(N)
        return {'width': chi.width(0), 'expected': 2 * (n_bar - 1), 'centred': chi.is_centred(0)}
