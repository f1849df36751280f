"""
characters.py

Symplectic characters of the double-staircase partition.

χ_N(z_1..z_N) = det(z_j^{μ_i} - z_j^{-μ_i}) / det(z_j^{δ_i} - z_j^{-δ_i}) with
δ_i = N-i+1, λ_i = ⌊(N-i)/2⌋, μ_i = λ_i + δ_i. At (1,…,1,z) the character
is a binomial determinant in the surrogate x, where z = (ωx+1)/(ω+x).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple
import logging
import random

import mpmath

from .algebra import (
    ExactScalar,
    IntPolynomial,
    MultiLaurent,
    OMEGA,
    bareiss_det,
    field_det,
    leading_minors,
    poly_det,
)
from .combinatorics import binom, gamma, nu
from .errors import ArgumentError, ConsistencyError
from .numerics import is_exact, richardson_extrapolate, to_mp

logger = logging.getLogger(__name__)

# Kind of binomial matrix, named after the parity of the character it builds
ODD, EVEN = 'odd', 'even'


@dataclass(frozen=True)
class CharacterSpec:
    """Partition data of χ_N."""

    N: int
    lambdas: Tuple[int, ...]
    deltas: Tuple[int, ...]
    mus: Tuple[int, ...]


def character_spec(N: int) -> CharacterSpec:
    if N < 0:
        raise ArgumentError(f"N must be non-negative, got {N}")
    lambdas = tuple((N - i) // 2 for i in range(1, N + 1))
    deltas = tuple(N - i + 1 for i in range(1, N + 1))
    mus = tuple(l + d for l, d in zip(lambdas, deltas))
    return CharacterSpec(N, lambdas, deltas, mus)


def _antisymmetric_power(z: Any, m: int) -> Any:
    return z ** m - z ** (-m)


def _check_arguments(zs: Sequence[Any]) -> None:
    for a, z in enumerate(zs):
        if z == 0:
            raise ArgumentError("character arguments must be nonzero")
        if z * z == 1:
            raise ArgumentError(f"argument {a} squares to 1")
        for b in range(a):
            w = zs[b]
            if z == w or z * w == 1:
                raise ArgumentError(f"arguments {b} and {a} coincide up to inversion")


def chi_ratio(zs: Sequence[Any]) -> Any:
    """
    χ_N from its definition as a ratio of determinants.

    Exact (ExactScalar) when every argument is int, Fraction or ExactScalar,
    mpmath otherwise.

    Raises:
        ArgumentError: If the denominator vanishes
    """
    N = len(zs)
    if N == 0:
        return ExactScalar(1)
    exact = all(is_exact(z) for z in zs)
    values = [ExactScalar.coerce(z) for z in zs] if exact else [to_mp(z) for z in zs]
    if exact:
        _check_arguments(values)
    spec = character_spec(N)
    num = [[_antisymmetric_power(z, m) for z in values] for m in spec.mus]
    den = [[_antisymmetric_power(z, m) for z in values] for m in spec.deltas]
    if exact:
        d = field_det(den, one=ExactScalar(1))
        if d.is_zero():
            raise ArgumentError("singular character arguments")
        return field_det(num, one=ExactScalar(1)) / d
    d = mpmath.det(mpmath.matrix(den))
    if d == 0:
        raise ArgumentError("singular character arguments")
    return mpmath.det(mpmath.matrix(num)) / d


def chi_homogeneous(N: int) -> int:
    """χ_N(1,…,1) = 3^{ν_N}·γ_N."""
    if N < 0:
        raise ArgumentError(f"N must be non-negative, got {N}")
    if N == 0:
        return 1
    return 3 ** nu(N) * gamma(N)


def binomial_entry(i: int, j: int, kind: str) -> Tuple[int, int]:
    """
    Coefficients (C1, C2) of the entry (x-1)²·C1 + x·C2, 1-based indices.

    The odd kind builds χ_{2n+1} (and even-even overlaps), the even kind
    builds χ_{2n+2} (and mixed-parity overlaps).
    """
    if kind == ODD:
        return binom(i + j - 2, 2 * j - i - 1), binom(i + j, 2 * j - i)
    if kind == EVEN:
        return binom(i + j - 1, 2 * j - i), binom(i + j + 1, 2 * j - i + 1)
    raise ArgumentError(f"unknown matrix kind {kind!r}")


def polynomial_matrix(size: int, kind: str) -> List[List[IntPolynomial]]:
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            c1, c2 = binomial_entry(i, j, kind)
            row.append(IntPolynomial([c1, c2 - 2 * c1, c1]))
        rows.append(row)
    return rows


def binomial_determinants(size: int, kind: str, x: Any) -> List[Any]:
    """
    Leading principal minors det_0..det_size of the binomial matrix at x.

    Rational x = p/q runs one integer Bareiss sweep on the scaled entries
    (p-q)²C1 + pqC2; other values sweep over their field.

    Returns:
        List of length size+1 with det_0 = 1; Fractions for rational x
    """
    if size < 0:
        raise ArgumentError(f"matrix size must be non-negative, got {size}")
    if size == 0:
        return [Fraction(1) if is_exact(x) else mpmath.mpf(1)]
    pairs = [[binomial_entry(i, j, kind) for j in range(1, size + 1)]
             for i in range(1, size + 1)]
    if isinstance(x, (int, Fraction)) or (isinstance(x, ExactScalar) and x.is_rational):
        xf = x.to_fraction() if isinstance(x, ExactScalar) else Fraction(x)
        p, q = xf.numerator, xf.denominator
        matrix = [[(p - q) ** 2 * c1 + p * q * c2 for c1, c2 in row] for row in pairs]
        try:
            minors = leading_minors(matrix)
        except ConsistencyError:
            minors = [bareiss_det([r[:k] for r in matrix[:k]]) for k in range(1, size + 1)]
        return [Fraction(1)] + [Fraction(m, q ** (2 * k)) for k, m in enumerate(minors, 1)]
    if isinstance(x, ExactScalar):
        sq = (x - 1) * (x - 1)
        matrix = [[sq * c1 + x * c2 for c1, c2 in row] for row in pairs]
        one: Any = ExactScalar(1)
        det = lambda k: field_det([r[:k] for r in matrix[:k]], one=one)
    else:
        xm = to_mp(x)
        sq = (xm - 1) ** 2
        matrix = [[sq * c1 + xm * c2 for c1, c2 in row] for row in pairs]
        one = mpmath.mpf(1)
        det = lambda k: mpmath.det(mpmath.matrix([r[:k] for r in matrix[:k]]))
    try:
        minors = leading_minors(matrix)
    except ConsistencyError:
        minors = [det(k) for k in range(1, size + 1)]
    return [one] + list(minors)


def _character_shape(N: int) -> Tuple[int, str]:
    """(matrix size = (1-x+x²) power, kind) for χ_N at (1,…,1,z)."""
    return (N - 1) // 2, ODD if N % 2 else EVEN


@dataclass(frozen=True)
class SpecializedCharacter:
    """
    χ_N(1,…,1,z) as 3^{three_power}·determinant(x) / (x² - x + 1)^{denominator_power}.
    """

    N: int
    three_power: int
    denominator_power: int
    determinant: IntPolynomial

    def at(self, x: Any) -> Any:
        """Exact value for int/Fraction/ExactScalar x, mpmath otherwise."""
        if not is_exact(x):
            x = to_mp(x)
        base = 1 - x + x * x
        if base == 0:
            raise ArgumentError("x is a root of x² - x + 1")
        return 3 ** self.three_power * self.determinant(x) / base ** self.denominator_power

    def __str__(self) -> str:
        text = f"({self.determinant})"
        if self.three_power:
            text = f"3^{self.three_power} * {text}"
        if self.denominator_power:
            text += f" / (x^2 - x + 1)^{self.denominator_power}"
        return text


def chi_specialized(N: int, x: Any = None) -> Any:
    """
    χ_N(1,…,1,(β/q)²) in terms of x.

    Args:
        N: Number of arguments, N >= 1
        x: None for the symbolic SpecializedCharacter, otherwise a value

    Returns:
        SpecializedCharacter, or its value (Fraction for rational x)

    Raises:
        ConsistencyError: If the symbolic determinant is not palindromic
    """
    if N < 1:
        raise ArgumentError(f"N must be at least 1, got {N}")
    size, kind = _character_shape(N)
    if x is None:
        det = poly_det(polynomial_matrix(size, kind))
        if not det.is_palindromic(2 * size):
            raise ConsistencyError(f"determinant of χ_{N} is not palindromic")
        return SpecializedCharacter(N, nu(N), size, det)
    det_value = binomial_determinants(size, kind, x)[size]
    xv = x if is_exact(x) else to_mp(x)
    base = 1 - xv + xv * xv
    if base == 0:
        raise ArgumentError("x is a root of x² - x + 1")
    return 3 ** nu(N) * det_value / base ** size


def _omega_value(exact: bool) -> Any:
    return OMEGA if exact else OMEGA.to_mp()


def z_from_x(x: Any) -> Any:
    """
    z = (ωx + 1)/(ω + x); exact ExactScalar for exact x, mpc otherwise.

    Raises:
        ArgumentError: At the pole x = -ω
    """
    exact = is_exact(x)
    q = _omega_value(exact)
    xv = ExactScalar.coerce(x) if exact else to_mp(x)
    den = q + xv
    if den == 0:
        raise ArgumentError("x = -ω is a pole of the x -> z map")
    return (q * xv + 1) / den


def x_from_z(z: Any) -> Any:
    """
    x = (1 - ωz)/(z - ω), inverse of z_from_x.

    Raises:
        ArgumentError: At the pole z = ω
    """
    exact = is_exact(z)
    q = _omega_value(exact)
    zv = ExactScalar.coerce(z) if exact else to_mp(z)
    den = zv - q
    if den == 0:
        raise ArgumentError("z = ω is a pole of the z -> x map")
    return (1 - q * zv) / den


def _real_if_possible(value: Any) -> Any:
    if isinstance(value, ExactScalar) and value.is_rational:
        return value.to_fraction()
    return value


def normalized_chi(N: int, z: Any) -> Any:
    """𝔛_N(z) = χ_N(1,…,1,z) / χ_N(1,…,1)."""
    return normalized_chi_x(N, _real_if_possible(x_from_z(z)))


def normalized_chi_x(N: int, x: Any) -> Any:
    """𝔛_N at the point z(x); exact for rational x."""
    if N == 0:
        return Fraction(1)
    return chi_specialized(N, x) / chi_homogeneous(N)


def normalized_chi_sequence(N_max: int, x: Any) -> List[Any]:
    """
    [𝔛_0, 𝔛_1, …, 𝔛_{N_max}] at one x from two leading-minor sweeps.

    The powers of 3 cancel: 𝔛_N = det_k(x) / ((1-x+x²)^k γ_N), k = ⌊(N-1)/2⌋.
    """
    if N_max < 0:
        raise ArgumentError(f"N_max must be non-negative, got {N_max}")
    top = max((N_max - 1) // 2, 0)
    odd = binomial_determinants(top, ODD, x)
    even = binomial_determinants(top, EVEN, x)
    xv = x if is_exact(x) else to_mp(x)
    base = 1 - xv + xv * xv
    out: List[Any] = [Fraction(1) if is_exact(x) else mpmath.mpf(1)]
    for N in range(1, N_max + 1):
        k, kind = _character_shape(N)
        det = odd[k] if kind == ODD else even[k]
        out.append(det / (base ** k * gamma(N)))
    return out


def check_chi_reduction(N: int, zs: Sequence[Any], i: int, j: int) -> Any:
    """
    Residual of χ_N(…, z_i, …, z_j = ω z_i, …)
    = ∏_{k≠i,j} z_k^{-1}(z_k - ω² z_i)(z_k - ω z_i^{-1}) · χ_{N-2}(rest).

    Args:
        N: Number of arguments, N >= 2
        zs: N arguments; entry j is replaced by ω·zs[i]
        i, j: Distinct 0-based positions

    Returns:
        Exact residual for exact arguments, else relative mpmath residual
    """
    if N < 2 or len(zs) != N:
        raise ArgumentError("reduction needs N >= 2 and N arguments")
    if i == j or not (0 <= i < N and 0 <= j < N):
        raise ArgumentError("reduction positions must be distinct and in range")
    exact = all(is_exact(z) for z in zs)
    q = _omega_value(exact)
    values = [ExactScalar.coerce(z) if exact else to_mp(z) for z in zs]
    values[j] = q * values[i]
    zi = values[i]
    rest = [z for k, z in enumerate(values) if k not in (i, j)]
    prefactor: Any = 1
    for zk in rest:
        prefactor = prefactor * (zk - q * q * zi) * (zk - q / zi) / zk
    lhs = chi_ratio(values)
    rhs = prefactor * chi_ratio(rest)
    if exact:
        return lhs - rhs
    scale = max(abs(lhs), abs(rhs), mpmath.mpf(1))
    return abs(lhs - rhs) / scale


def check_chi_leading(N: int, i: int = 0, magnitude: Any = 10 ** 6,
                      seed: Optional[int] = None) -> Any:
    """
    Relative residual of z_i^{-(n̄-1)} χ_N - χ_{N-1}(rest) at large |z_i|.

    The remaining arguments are random reals in (1.1, 2.1).
    """
    if N < 1 or not 0 <= i < N:
        raise ArgumentError("leading-term check needs N >= 1 and 0 <= i < N")
    rng = random.Random(seed)
    values = [mpmath.mpf(1.1 + rng.random()) for _ in range(N)]
    values[i] = mpmath.mpf(magnitude)
    n_bar = N - N // 2
    lhs = chi_ratio(values) / values[i] ** (n_bar - 1)
    rhs = to_mp(chi_ratio([z for k, z in enumerate(values) if k != i]))
    return abs(lhs - rhs) / max(abs(rhs), mpmath.mpf(1))


def chi_in_one_variable(N: int, others: Optional[Sequence[int]] = None) -> MultiLaurent:
    """
    χ_N as a Laurent polynomial in z_1 with the other arguments fixed.

    Both determinants are expanded with Bareiss over Q[z, 1/z] and divided
    exactly.
    """
    if N < 1:
        raise ArgumentError(f"N must be at least 1, got {N}")
    fixed = list(others) if others is not None else [k + 2 for k in range(N - 1)]
    if len(fixed) != N - 1:
        raise ArgumentError("need N-1 fixed arguments")
    spec = character_spec(N)
    z = MultiLaurent.variable(1, 0)

    def column_matrix(powers: Sequence[int]) -> List[List[MultiLaurent]]:
        rows = []
        for m in powers:
            row = [z ** m - z ** (-m)]
            for w in fixed:
                row.append(MultiLaurent.constant(1, Fraction(w) ** m - Fraction(w) ** (-m)))
            rows.append(row)
        return rows

    one = MultiLaurent.constant(1)
    num = bareiss_det(column_matrix(spec.mus), one=one)
    den = bareiss_det(column_matrix(spec.deltas), one=one)
    return num // den


def chi_width(N: int) -> int:
    """Degree width of χ_N in one argument (expected 2(n̄-1))."""
    return chi_in_one_variable(N).width(0)


def chi_near_homogeneous(N: int, steps: int = 5, eps: Any = Fraction(1, 8)) -> Any:
    """
    Extrapolate χ_N(e^{ε}, e^{2ε}, …, e^{Nε}) to ε -> 0.

    The value is even in ε, so Richardson with p = 2 over ε/2^k applies.
    Working precision is raised to absorb the 0/0 cancellation.
    """
    if N < 1 or steps < 2:
        raise ArgumentError("coalescence check needs N >= 1 and steps >= 2")
    extra = 4 * N * N
    values = []
    with mpmath.extradps(extra):
        for k in range(steps):
            h = to_mp(eps) / 2 ** k
            values.append(chi_ratio([mpmath.exp(h * (a + 1)) for a in range(N)]))
        result = richardson_extrapolate(values, p=2, r=2.0)
    return +result
