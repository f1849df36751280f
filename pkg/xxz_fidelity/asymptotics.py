"""
asymptotics.py

Large-N behaviour of the logarithmic bipartite fidelity: the boundary
parameterisation x(r), the coefficients D, E, Ē and τ₂, τ̄₂, the truncated
series for every admissible parity pattern, the large-N form of the
normalised character, the differential equation it satisfies, the
free-boson CFT prediction and the finite-size comparison sweep.

Every function evaluates at the current mpmath precision; wrap calls in
``numerics.precision`` for more than the mpmath default.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence
import logging

import mpmath
import numpy as np

from .characters import normalized_chi, normalized_chi_sequence
from .errors import ArgumentError, ConsistencyError, IllDefinedError, NumericalFailure
from .models.spin_chain import check_x, ground_energy
from .numerics import is_exact, to_mp
from .overlap import both_odd, lbf_susy_exact, lbf_sweep

logger = logging.getLogger(__name__)

ORDERS = ('log', 'const', '1/N')
EVEN_EVEN, EVEN_ODD, ODD_EVEN = 'even-even', 'even-odd', 'odd-even'

# D has a removable singularity at r = 1
D_SWITCH_RADIUS = 1e-6

COMPARISON_COLUMNS = ['N', 'N1', 'N2', 'xi', 'F_exact', 'F_asymp', 'diff']


def supersymmetric_constant() -> Any:
    """K = 8√(π/3) / (3Γ(1/3)), the value of D at r = 1."""
    return 8 * mpmath.sqrt(mpmath.pi / 3) / (3 * mpmath.gamma(mpmath.mpf(1) / 3))


def x_from_r(r: Any) -> Any:
    """
    x = sin(π(r+1)/3) / sin(πr/3) = 1/2 + (√3/2)cot(πr/3).

    Raises:
        ArgumentError: If r is outside (0, 2)
    """
    r = to_mp(r)
    if not 0 < r < 2:
        raise ArgumentError(f"r must lie in (0, 2), got {r}")
    return mpmath.sin(mpmath.pi * (r + 1) / 3) / mpmath.sin(mpmath.pi * r / 3)


def r_from_x(x: Any) -> Any:
    """
    Unique r in (0, 2) with x_from_r(r) = x.

    cot(πr/3) = (2x - 1)/√3 inverts in closed form; atan2 keeps the angle
    in (0, 2π/3) for every x > 0.

    Raises:
        ArgumentError: If x <= 0
    """
    xm = to_mp(x)
    if isinstance(xm, mpmath.mpc) or xm <= 0:
        raise ArgumentError(f"x must be a positive real, got {x}")
    _check_monotone()
    return 3 * mpmath.atan2(mpmath.sqrt(3), 2 * xm - 1) / mpmath.pi


@lru_cache(maxsize=1)
def _check_monotone(points: int = 64) -> bool:
    """Certify on a grid that x(r) is strictly decreasing on (0, 2)."""
    grid = [mpmath.mpf(k) * 2 / (points + 1) for k in range(1, points + 1)]
    values = [x_from_r(r) for r in grid]
    if any(b >= a for a, b in zip(values, values[1:])):
        raise ConsistencyError("x(r) is not strictly decreasing on the sample grid")
    return True


@dataclass(frozen=True)
class BoundaryParam:
    """
    The boundary parameter in its three coordinates.

    Attributes:
        x: Positive real surrogate of the boundary fields
        r: Angle coordinate in (0, 2), r(1) = 1
        theta: 2π(1-r)/3
        z: e^{iθ} on the unit circle
    """

    x: Any
    r: Any
    theta: Any
    z: Any

    @classmethod
    def from_r(cls, r: Any) -> 'BoundaryParam':
        r = to_mp(r)
        x = x_from_r(r)
        theta = 2 * mpmath.pi * (1 - r) / 3
        return cls(x, r, theta, mpmath.expjpi(2 * (1 - r) / 3))

    @classmethod
    def from_x(cls, x: Any) -> 'BoundaryParam':
        param = cls.from_r(r_from_x(x))
        return cls(to_mp(x), param.r, param.theta, param.z)


@dataclass(frozen=True)
class AsymptoticCoeffs:
    """Coefficients of the large-N series at one value of r."""

    r: Any
    D: Any
    E: Any
    E_bar: Any
    tau2: Any
    tau2_bar: Any
    K: Any
    tau1: int = 0
    tau1_bar: int = 0


def coeffs(r: Any) -> AsymptoticCoeffs:
    """
    D, E, Ē, τ₂ and τ̄₂ at r.

    Raises:
        ArgumentError: If r is outside (0, 2)
    """
    r = to_mp(r)
    if not 0 < r < 2:
        raise ArgumentError(f"r must lie in (0, 2), got {r}")
    K = supersymmetric_constant()
    S = mpmath.sin(mpmath.pi * (r - 1) / 2) ** 2
    if abs(r - 1) < D_SWITCH_RADIUS:
        D = K
    else:
        D = (2 / mpmath.gamma(mpmath.mpf(1) / 3) * mpmath.sqrt(mpmath.pi / 3)
             * mpmath.sin(2 * mpmath.pi * (r - 1) / 3) / mpmath.sin(mpmath.pi * (r - 1) / 2))
    return AsymptoticCoeffs(
        r=r, D=D, E=13 - 14 * S, E_bar=11 - 10 * S,
        tau2=5 * S / 36, tau2_bar=-7 * S / 36, K=K,
    )


def parity_case(N1: int, N2: int) -> str:
    """
    Raises:
        IllDefinedError: If N1 and N2 are both odd
    """
    if both_odd(N1, N2):
        raise IllDefinedError(f"F_{{{N1},{N2}}} is ill-defined for two odd sub-chains")
    if N1 % 2 == 0 and N2 % 2 == 0:
        return EVEN_EVEN
    return EVEN_ODD if N1 % 2 == 0 else ODD_EVEN


def _check_series_args(N1: int, N2: int, order: str) -> str:
    if N1 < 1 or N2 < 1:
        raise ArgumentError(f"sub-chain lengths must be positive, got ({N1}, {N2})")
    if order not in ORDERS:
        raise ArgumentError(f"order must be one of {ORDERS}, got {order!r}")
    return parity_case(N1, N2)


def _series(case: str, N: int, xi: Any, D: Any, E: Any, E_bar: Any, order: str) -> Any:
    if case == ODD_EVEN:
        xi = 1 - xi
        case = EVEN_ODD
    value = mpmath.log(N) / 6
    if order == 'log':
        return value
    if case == EVEN_EVEN:
        value += mpmath.log(xi * (1 - xi)) / 6 - mpmath.log(D)
        if order == '1/N':
            value += E / 72 * (1 / xi + 1 / (1 - xi) - 1) / N
    else:
        value += mpmath.log(xi / (1 - xi)) / 6 - mpmath.log(D)
        if order == '1/N':
            value += (E / xi + E_bar * (1 - 1 / (1 - xi))) / (72 * N)
    return value


def lbf_asymptotic(N1: int, N2: int, x: Any, order: str = '1/N') -> Any:
    """
    Truncated large-N series of F_{N1,N2}(x).

    Args:
        N1, N2: Positive sub-chain lengths, not both odd
        x: Positive real
        order: 'log' (leading term), 'const' (through O(1)) or '1/N'

    Raises:
        IllDefinedError: If N1 and N2 are both odd
    """
    case = _check_series_args(N1, N2, order)
    c = coeffs(r_from_x(x))
    N = N1 + N2
    xi = mpmath.mpf(N1) / N
    return _series(case, N, xi, c.D, c.E, c.E_bar, order)


def lbf_susy_asymptotic(N1: int, N2: int, order: str = '1/N') -> Any:
    """The x = 1 series with D = K, E = 13 and Ē = 11."""
    case = _check_series_args(N1, N2, order)
    N = N1 + N2
    xi = mpmath.mpf(N1) / N
    return _series(case, N, xi, supersymmetric_constant(), 13, 11, order)


def lbf_asymptotic_assembled(N1: int, N2: int, x: Any, order: str = '1/N') -> Any:
    """
    F(1) computed exactly minus the large-N form of the character ratio:
    F(x) ≈ F(1) - ln(3sin(2π(r-1)/3) / (4sin(π(r-1)/2))) - (1/N correction).
    """
    case = _check_series_args(N1, N2, order)
    c = coeffs(r_from_x(x))
    N = N1 + N2
    xi = mpmath.mpf(N1) / N
    if case == ODD_EVEN:
        xi, case = 1 - xi, EVEN_ODD
    if abs(c.r - 1) < D_SWITCH_RADIUS:
        split = mpmath.mpf(0)
    else:
        split = mpmath.log(3 * mpmath.sin(2 * mpmath.pi * (c.r - 1) / 3)
                           / (4 * mpmath.sin(mpmath.pi * (c.r - 1) / 2)))
    if order == '1/N':
        if case == EVEN_EVEN:
            split += c.tau2_bar * (1 - 1 / xi - 1 / (1 - xi)) / N
        else:
            split += (c.tau2 * (1 - 1 / (1 - xi)) - c.tau2_bar / xi) / N
    return lbf_susy_exact(N1, N2) - split


def character_prefactor(theta: Any, N: int) -> Any:
    """
    Large-N form of 𝔛_N(e^{iθ}) without the 1 + τ/N correction:
    3sin(θ/2) / (2sin(3θ/4)cos(θ/2)) · (4/9 · sin²(3θ/4)/sin²(θ/2))^N.

    Raises:
        ArgumentError: If sin(3θ/4) or cos(θ/2) vanishes at θ ≠ 0
    """
    theta = to_mp(theta)
    if theta == 0:
        return mpmath.mpf(1)
    s_half = mpmath.sin(theta / 2)
    s_three = mpmath.sin(3 * theta / 4)
    c_half = mpmath.cos(theta / 2)
    if s_three == 0 or c_half == 0:
        raise ArgumentError(f"θ = {theta} is a singular point of the large-N form")
    pre = 3 * s_half / (2 * s_three * c_half)
    return pre * (mpmath.mpf(4) / 9 * s_three ** 2 / s_half ** 2) ** N


def character_prefactor_complex(z: Any, N: int) -> Any:
    """
    The same prefactor from z with principal-branch powers:
    3z^{3/4}(z-1) / ((z^{3/2}-1)(z+1)) · (4/9 · (z^{3/2}-1)² / (z^{1/2}(z-1)²))^N.
    """
    z = mpmath.mpc(to_mp(z))
    z34 = mpmath.power(z, mpmath.mpf(3) / 4)
    z32 = mpmath.power(z, mpmath.mpf(3) / 2)
    z12 = mpmath.sqrt(z)
    pre = 3 * z34 * (z - 1) / ((z32 - 1) * (z + 1))
    return pre * (mpmath.mpf(4) / 9 * (z32 - 1) ** 2 / (z12 * (z - 1) ** 2)) ** N


def _class_sizes(parity: str, N_max: int) -> List[int]:
    if parity not in ('even', 'odd'):
        raise ArgumentError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == 'even' else 1
    return [N for N in range(max(N_max // 2, 2), N_max + 1) if N % 2 == want]


def _remainders(parity: str, x: Any, N_max: int) -> Dict[int, Any]:
    """R_N = (𝔛_N / prefactor - 1)·N on one parity class."""
    param = BoundaryParam.from_x(x)
    chis = normalized_chi_sequence(N_max, x)
    out = {}
    for N in _class_sizes(parity, N_max):
        ratio = to_mp(chis[N]) / character_prefactor(param.theta, N)
        out[N] = (ratio - 1) * N
    return out


def _least_squares(ns: Sequence[int], values: Sequence[Any], powers: Sequence[float]) -> np.ndarray:
    A = np.array([[float(n) ** p for p in powers] for n in ns])
    b = np.array([float(v) for v in values])
    if not np.all(np.isfinite(b)):
        raise NumericalFailure("non-finite remainders in the fit", data=list(values))
    solution, _, rank, _ = np.linalg.lstsq(A, b, rcond=None)
    if rank < len(powers):
        raise NumericalFailure("rank-deficient least-squares fit", data=list(values))
    return solution


def fit_half_integer_coefficient(parity: str, x: Any, N_max: int = 200) -> float:
    """
    Coefficient of N^{1/2} in R_N from a fit on N^{1/2}, 1, N^{-1/2}, N^{-1};
    zero when the expansion has no N^{-1/2} term.
    """
    R = _remainders(parity, x, N_max)
    ns = sorted(R)
    solution = _least_squares(ns, [R[n] for n in ns], (0.5, 0.0, -0.5, -1.0))
    return float(solution[0])


@dataclass
class TauEstimate:
    """Fitted 1/N coefficient of the normalised character on one parity class."""

    parity: str
    x: Any
    r: Any
    tau: float
    expected: float
    sizes: List[int] = field(default_factory=list)
    remainders: List[float] = field(default_factory=list)

    @property
    def relative_error(self) -> float:
        if self.expected == 0:
            return abs(self.tau)
        return abs(self.tau - self.expected) / abs(self.expected)


def estimate_tau(parity: str, x: Any, N_max: int = 200) -> TauEstimate:
    """
    Fit τ₂ (even class) or τ̄₂ (odd class) from exact character values.

    R_N = (𝔛_N(z)/prefactor - 1)·N is fitted on 1, N^{-1}, N^{-2} over
    N in [N_max/2, N_max] within one parity class.

    Args:
        parity: 'even' or 'odd'
        x: Boundary parameter; exact rationals keep the character sweep exact
        N_max: Largest character size

    Raises:
        NumericalFailure: If the fit is degenerate (carries the R_N sequence)
    """
    if N_max < 8:
        raise ArgumentError(f"N_max must be at least 8, got {N_max}")
    if is_exact(x):
        x = check_x(x)
    R = _remainders(parity, x, N_max)
    ns = sorted(R)
    values = [R[n] for n in ns]
    if all(v == 0 for v in values):
        tau = 0.0
    else:
        tau = float(_least_squares(ns, values, (0.0, -1.0, -2.0))[0])
    c = coeffs(r_from_x(x))
    expected = float(c.tau2 if parity == 'even' else c.tau2_bar)
    logger.info("fitted %s-class coefficient %.6g (expected %.6g)", parity, tau, expected)
    return TauEstimate(parity, x, c.r, tau, expected, ns, [float(v) for v in values])


def _ode_coefficients(n: int, parity: str) -> tuple:
    """(N, first-order coefficient, zeroth-order coefficient) of the ODE for f_N."""
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    if parity == 'even':
        return 2 * n, 3 * (2 * n - 1), (3 * n - 1) * (3 * n - 2)
    if parity == 'odd':
        return 2 * n + 1, 6 * n, (3 * n + 1) * (3 * n - 1)
    raise ArgumentError(f"parity must be 'even' or 'odd', got {parity!r}")


def check_ode(n: int, parity: str, z: Any, h: Optional[Any] = None) -> Any:
    """
    Relative residual of z(zf')' + a·(1+z³)/(1-z³)·zf' + b·f for
    f_N(z) = z^{-N}(z-1)^{2N-1}(z+1)𝔛_N(z), N = 2n or 2n+1.

    Derivatives come from mpmath.diff; ``h`` overrides its step.

    Raises:
        ArgumentError: If z = 0 or z³ = 1
    """
    N, a, b = _ode_coefficients(n, parity)
    z = to_mp(z)
    if z == 0 or abs(z ** 3 - 1) < mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
        raise ArgumentError(f"z = {z} is a singular point of the differential equation")

    def f(w):
        return w ** (-N) * (w - 1) ** (2 * N - 1) * (w + 1) * normalized_chi(N, w)

    options = {} if h is None else {'h': to_mp(h)}
    with mpmath.extradps(20):
        f0 = f(z)
        f1 = mpmath.diff(f, z, 1, **options)
        f2 = mpmath.diff(f, z, 2, **options)
    terms = [z * f1 + z * z * f2, a * (1 + z ** 3) / (1 - z ** 3) * z * f1, b * f0]
    scale = max(max(abs(t) for t in terms), mpmath.mpf(10) ** (-mpmath.mp.dps))
    return abs(sum(terms)) / scale


@dataclass(frozen=True)
class CftCharges:
    """
    U(1) charges of the four boundary fields of a free boson (c = 1);
    fields 1 and 3 sit at the legs, 2 at the tip of the slit, 4 on top.

    Raises:
        ArgumentError: If the charges are not neutral
    """

    alpha1: Any
    alpha2: Any
    alpha3: Any
    alpha4: Any
    central_charge: int = 1

    def __post_init__(self):
        total = self.alpha1 + self.alpha2 + self.alpha3 + self.alpha4
        if abs(total) > mpmath.mpf(10) ** (-mpmath.mp.dps + 5):
            raise ArgumentError(f"charges violate neutrality: sum = {total}")

    @staticmethod
    def _unit() -> Any:
        return 1 / (2 * mpmath.sqrt(3))

    @classmethod
    def even_even(cls) -> 'CftCharges':
        a = cls._unit()
        return cls(a, -a, a, -a)

    @classmethod
    def even_odd(cls) -> 'CftCharges':
        a = cls._unit()
        return cls(a, -a, -a, a)

    @classmethod
    def odd_even(cls) -> 'CftCharges':
        a = cls._unit()
        return cls(-a, -a, a, a)

    @classmethod
    def for_sizes(cls, N1: int, N2: int) -> 'CftCharges':
        case = parity_case(N1, N2)
        return {EVEN_EVEN: cls.even_even, EVEN_ODD: cls.even_odd, ODD_EVEN: cls.odd_even}[case]()

    @property
    def weights(self) -> tuple:
        """Δᵢ = αᵢ²/2."""
        return tuple(a * a / 2 for a in (self.alpha1, self.alpha2, self.alpha3, self.alpha4))

    @property
    def ground_weight(self) -> Fraction:
        return Fraction(self.central_charge, 24)

    def leading_coefficient(self) -> Any:
        """c/8 + Δ₂, the universal coefficient of ln N."""
        return mpmath.mpf(self.central_charge) / 8 + self.weights[1]


def _check_xi(xi: Any) -> Any:
    xi = to_mp(xi)
    if not 0 < xi < 1:
        raise ArgumentError(f"ξ must lie in (0, 1), got {xi}")
    return xi


def cft_f(xi: Any, charges: CftCharges, C: Any = 0) -> Any:
    """O(1) term of the CFT prediction; C is the non-universal constant."""
    xi = _check_xi(xi)
    a1, a2, a3, a4 = charges.alpha1, charges.alpha2, charges.alpha3, charges.alpha4
    one = mpmath.mpf(1)
    left = ((2 * xi - 1 + 2 / xi) / 24 + (1 - 1 / xi) * a1 ** 2 - a2 ** 2 / 2
            - 2 * a2 * a3 - a3 ** 2 + (1 - xi) * a4 ** 2)
    right = ((1 - 2 * xi + 2 / (1 - xi)) / 24 + (1 - 1 / (1 - xi)) * a3 ** 2 - a2 ** 2 / 2
             - 2 * a2 * a1 - a1 ** 2 + xi * a4 ** 2)
    return left * mpmath.log(one - xi) + right * mpmath.log(xi) + C


def cft_g(xi: Any, charges: CftCharges, extrapolation_length: Any = 1) -> Any:
    """Coefficient of N^{-1} ln N in the CFT prediction."""
    xi = _check_xi(xi)
    twelfth = mpmath.mpf(1) / 12
    return extrapolation_length * (
        charges.alpha4 ** 2 - twelfth
        + (twelfth - charges.alpha1 ** 2) / xi
        + (twelfth - charges.alpha3 ** 2) / (1 - xi)
    ) / 2


def energy_expansion_check(N: int, x: Any) -> Dict[str, Any]:
    """
    Compare E₀ with N·E_bulk + E_bndr; the 1/N term vanishes because the
    ground-state weight equals c/24.

    Returns:
        Record with the exact pieces and the exact residual
    """
    x = check_x(x)
    bulk = Fraction(-3, 4)
    boundary = (2 - x) * (2 - 1 / x) / 4
    weight = Fraction(1, 24)
    central = 1
    E0 = ground_energy(N, x)
    residual = E0 - (N * bulk + boundary) - (weight - Fraction(central, 24))
    return {
        'N': N,
        'x': x,
        'E0': E0,
        'E_bulk': bulk,
        'E_bndr': boundary,
        'Delta0': weight,
        'residual': residual,
        'passed': residual == 0,
    }


@dataclass
class ComparisonTable:
    """
    Exact and asymptotic LBF over one ξ sweep.

    Attributes:
        rows: One dict per N1 with the COMPARISON_COLUMNS keys
        max_diff: Largest |F_exact - F_asymp| over all rows
        interior_max_diff: Same over rows with min(N1, N2) >= interior_min,
            None when the sweep has no such row
    """

    N: int
    x: Any
    rows: List[Dict[str, Any]]
    max_diff: Any
    interior_max_diff: Optional[Any]
    interior_min: int

    def within(self, tolerance: Any, bound: Any = None) -> bool:
        """Interior rows within ``tolerance`` and every row within ``bound``; False without interior rows."""
        if self.interior_max_diff is None:
            logger.warning("comparison N=%d has no rows with min(N1, N2) >= %d", self.N, self.interior_min)
            return False
        ok = self.interior_max_diff <= tolerance
        if bound is not None:
            ok = ok and self.max_diff <= bound
        return ok


def comparison_sizes(N: int) -> List[int]:
    """Even N1 with the complement at least 1 (even N2 for even N, odd for odd N)."""
    if N < 3:
        raise ArgumentError(f"comparison needs N >= 3, got {N}")
    top = N - 2 if N % 2 == 0 else N - 1
    return list(range(2, top + 1, 2))


def compare_finite_size(N: int, x: Any, interior_min: int = 8) -> ComparisonTable:
    """
    Exact LBF from one determinant sweep next to the series truncated
    after the 1/N term, for every even N1.
    """
    x = check_x(x)
    exact = lbf_sweep(N, x)
    rows = []
    for N1 in comparison_sizes(N):
        N2 = N - N1
        F_exact = exact[N1]
        F_asymp = lbf_asymptotic(N1, N2, x, order='1/N')
        rows.append({
            'N': N,
            'N1': N1,
            'N2': N2,
            'xi': mpmath.mpf(N1) / N,
            'F_exact': F_exact,
            'F_asymp': F_asymp,
            'diff': F_exact - F_asymp,
        })
    diffs = [abs(row['diff']) for row in rows]
    interior = [abs(row['diff']) for row in rows if min(row['N1'], row['N2']) >= interior_min]
    table = ComparisonTable(N, x, rows, max(diffs), max(interior) if interior else None, interior_min)
    logger.info("comparison N=%d x=%s: max |diff| %s, interior %s",
                N, x, mpmath.nstr(table.max_diff, 5),
                mpmath.nstr(table.interior_max_diff, 5) if interior else "no interior rows")
    return table
