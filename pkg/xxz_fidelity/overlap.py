"""
overlap.py

Overlaps O_{N1,N2} = ⟨ψ_N | ψ_{N1} ⊗ ψ_{N2}⟩ and the logarithmic bipartite
fidelity F = -ln(O_{N1,N2}² / (O_{N1,0} O_{N2,0} O_{N,0})).

Two routes: contraction of exact ground states (the oracle) and the
closed-form binomial determinants. O_{N1,N2} depends on (N1, N2) only through
γ_{N1}γ_{N2} and a determinant D_N(x) of the total length, so a single
leading-minor sweep gives every overlap of one chain length.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence
import logging

import mpmath

from .algebra import IntPolynomial, poly_det
from .characters import (
    EVEN,
    ODD,
    binomial_determinants,
    chi_homogeneous,
    chi_specialized,
    normalized_chi_x,
    polynomial_matrix,
)
from .combinatorics import a_o, gamma, nu
from .errors import ArgumentError, IllDefinedError
from .models.spin_chain import GroundStateVector, SectorBasis, check_x, ground_state
from .numerics import is_exact, log_ratio, to_mp

logger = logging.getLogger(__name__)


@dataclass
class OverlapValue:
    """
    Overlap O_{N1,N2}; ``value`` is exact for rational x, ``polynomial``
    holds the symbolic form in x when requested.
    """

    N1: int
    N2: int
    x: Optional[Fraction]
    value: Optional[Fraction] = None
    polynomial: Optional[IntPolynomial] = None
    vanishes: bool = False
    route: str = 'determinant'


@dataclass
class FidelityValue:
    """Logarithmic bipartite fidelity at working precision."""

    N1: int
    N2: int
    x: Any
    value: Any
    ratio: Optional[Fraction] = None
    route: str = 'determinant'


def _check_sizes(N1: int, N2: int) -> None:
    if N1 < 0 or N2 < 0:
        raise ArgumentError(f"sub-chain lengths must be non-negative, got ({N1}, {N2})")


def both_odd(N1: int, N2: int) -> bool:
    return N1 % 2 == 1 and N2 % 2 == 1


def determinant_kind(N: int) -> str:
    """Binomial matrix kind of D_N: odd kind for even N, even kind for odd N."""
    return ODD if N % 2 == 0 else EVEN


@lru_cache(maxsize=256)
def certified_ground_state(N: int, x: Fraction) -> GroundStateVector:
    """Cached ``ground_state``; contractions and the oracle suite share it."""
    return ground_state(N, x)


def _ground_components(N: int, x: Fraction) -> Sequence[Fraction]:
    if N == 0:
        return [Fraction(1)]
    return certified_ground_state(N, x).components


def overlap_contract(N1: int, N2: int, x: Any) -> OverlapValue:
    """
    Exact contraction ⟨ψ_N | ψ_{N1} ⊗ ψ_{N2}⟩ with the transpose pairing.

    Raises:
        DegenerateKernelError: Propagated from the ground-state solver
    """
    _check_sizes(N1, N2)
    x = check_x(x)
    if both_odd(N1, N2):
        return OverlapValue(N1, N2, x, Fraction(0), vanishes=True, route='contraction')
    N = N1 + N2
    if N == 0:
        return OverlapValue(N1, N2, x, Fraction(1), route='contraction')
    full = _ground_components(N, x)
    left = _ground_components(N1, x)
    right = _ground_components(N2, x)
    index = SectorBasis.build(N).index
    left_states = SectorBasis.build(N1).states
    right_states = SectorBasis.build(N2).states
    total = Fraction(0)
    for a, wa in enumerate(left_states):
        for b, wb in enumerate(right_states):
            k = index.get(wa + wb)
            if k is not None:
                total += full[k] * left[a] * right[b]
    logger.debug("contracted O_{%d,%d}(x=%s) = %s", N1, N2, x, total)
    return OverlapValue(N1, N2, x, total, vanishes=(total == 0), route='contraction')


def overlap_polynomial(N1: int, N2: int) -> IntPolynomial:
    """γ_{N1}γ_{N2}·det as a polynomial in x (zero for odd-odd)."""
    _check_sizes(N1, N2)
    if both_odd(N1, N2):
        return IntPolynomial()
    N = N1 + N2
    det = poly_det(polynomial_matrix(N // 2, determinant_kind(N)))
    return det * (gamma(N1) * gamma(N2))


def overlap_determinant(N1: int, N2: int, x: Any = None) -> OverlapValue:
    """
    Determinant formula for O_{N1,N2}.

    Args:
        N1, N2: Sub-chain lengths
        x: Positive rational, or None for the symbolic polynomial

    Returns:
        OverlapValue; odd-odd pairs give an exact zero with ``vanishes`` set
    """
    _check_sizes(N1, N2)
    if x is not None:
        x = check_x(x)
    if both_odd(N1, N2):
        zero = Fraction(0) if x is not None else None
        return OverlapValue(N1, N2, x, zero, IntPolynomial(), vanishes=True)
    if x is None:
        return OverlapValue(N1, N2, None, polynomial=overlap_polynomial(N1, N2))
    N = N1 + N2
    det = binomial_determinants(N // 2, determinant_kind(N), x)[N // 2]
    return OverlapValue(N1, N2, x, gamma(N1) * gamma(N2) * det)


def determinant_sweep(N_max: int, x: Any) -> List[Any]:
    """[D_0(x), …, D_{N_max}(x)] from one sweep per matrix kind."""
    if N_max < 0:
        raise ArgumentError(f"N_max must be non-negative, got {N_max}")
    even_n = binomial_determinants(N_max // 2, ODD, x)
    odd_n = binomial_determinants(max((N_max - 1) // 2, 0), EVEN, x)
    return [even_n[M // 2] if M % 2 == 0 else odd_n[M // 2] for M in range(N_max + 1)]


def overlap_sweep(N: int, x: Any) -> Dict[int, Fraction]:
    """
    All determinant-route overlaps O_{N1, N-N1} of one chain length.

    Returns:
        Mapping N1 -> O_{N1,N-N1} (odd-odd pairs map to 0)
    """
    x = check_x(x)
    D = determinant_sweep(N, x)[N]
    return {N1: (Fraction(0) if both_odd(N1, N - N1) else gamma(N1) * gamma(N - N1) * D)
            for N1 in range(N + 1)}


def lbf_from_overlaps(O12: Any, O1: Any, O2: Any, O: Any) -> Any:
    """-ln(O12² / (O1·O2·O)) at working precision."""
    if all(isinstance(v, (int, Fraction)) for v in (O12, O1, O2, O)):
        return -log_ratio(Fraction(O12) ** 2 / (Fraction(O1) * O2 * O))
    return -mpmath.log(to_mp(O12) ** 2 / (to_mp(O1) * to_mp(O2) * to_mp(O)))


def lbf(N1: int, N2: int, x: Any, route: str = 'determinant') -> FidelityValue:
    """
    Logarithmic bipartite fidelity.

    Args:
        N1, N2: Sub-chain lengths, not both odd
        x: Positive rational
        route: 'determinant' or 'contraction'

    Raises:
        IllDefinedError: If N1 and N2 are both odd
    """
    _check_sizes(N1, N2)
    if both_odd(N1, N2):
        raise IllDefinedError(f"F_{{{N1},{N2}}} is ill-defined for two odd sub-chains")
    x = check_x(x)
    if route == 'determinant':
        D = determinant_sweep(N1 + N2, x)
        N = N1 + N2
        O12 = gamma(N1) * gamma(N2) * D[N]
        O1, O2, O = gamma(N1) * D[N1], gamma(N2) * D[N2], gamma(N) * D[N]
    elif route == 'contraction':
        O12 = overlap_contract(N1, N2, x).value
        O1 = overlap_contract(N1, 0, x).value
        O2 = overlap_contract(N2, 0, x).value
        O = overlap_contract(N1 + N2, 0, x).value
    else:
        raise ArgumentError(f"unknown route {route!r}")
    ratio = Fraction(O12) ** 2 / (Fraction(O1) * O2 * O)
    return FidelityValue(N1, N2, x, -log_ratio(ratio), ratio, route)


def lbf_sweep(N: int, x: Any) -> Dict[int, Any]:
    """F_{N1, N-N1} for every admissible N1 of one chain length."""
    x = check_x(x)
    D = determinant_sweep(N, x)
    out = {}
    for N1 in range(N + 1):
        N2 = N - N1
        if both_odd(N1, N2):
            continue
        ratio = Fraction(gamma(N1) * gamma(N2) * D[N], gamma(N) * D[N1] * D[N2])
        out[N1] = -log_ratio(ratio)
    return out


def lbf_susy_exact(N1: int, N2: int) -> Any:
    """F at x = 1: -ln(γ_{N1}γ_{N2}γ_{N+1} / (γ_{N1+1}γ_{N2+1}γ_N))."""
    _check_sizes(N1, N2)
    if both_odd(N1, N2):
        raise IllDefinedError(f"F_{{{N1},{N2}}} is ill-defined for two odd sub-chains")
    N = N1 + N2
    return -log_ratio(Fraction(gamma(N1) * gamma(N2) * gamma(N + 1),
                               gamma(N1 + 1) * gamma(N2 + 1) * gamma(N)))


def lbf_from_characters(N1: int, N2: int, x: Any) -> Any:
    """F(x) = F(1) - ln(𝔛_{N+1} / (𝔛_{N1+1} 𝔛_{N2+1})) at z(x)."""
    _check_sizes(N1, N2)
    if both_odd(N1, N2):
        raise IllDefinedError(f"F_{{{N1},{N2}}} is ill-defined for two odd sub-chains")
    N = N1 + N2
    ratio = normalized_chi_x(N + 1, x) / (normalized_chi_x(N1 + 1, x) * normalized_chi_x(N2 + 1, x))
    split = log_ratio(ratio) if is_exact(ratio) else mpmath.log(ratio)
    return lbf_susy_exact(N1, N2) - split


def overlap_from_characters(N1: int, N2: int, x: Any) -> Any:
    """
    O_{N1,N2} assembled from characters:
    3^{-ν}χ_{N1}(1..1) · 3^{-ν}χ_{N2}(1..1) · 3^{-ν}(1-x+x²)^n χ_{N+1}(1,…,1,z).
    """
    _check_sizes(N1, N2)
    if both_odd(N1, N2):
        return Fraction(0)
    N = N1 + N2
    x = check_x(x)
    left = Fraction(chi_homogeneous(N1), 3 ** nu(N1)) if N1 else Fraction(1)
    right = Fraction(chi_homogeneous(N2), 3 ** nu(N2)) if N2 else Fraction(1)
    full = chi_specialized(N + 1, x) * (1 - x + x * x) ** (N // 2) / 3 ** nu(N + 1)
    return left * right * full


def compare_routes(N1: int, N2: int, x: Any) -> Dict[str, Any]:
    """
    Oracle comparison of the contraction and determinant routes.

    Returns:
        Record with both values, the relative sign and agreement flags
    """
    contract = overlap_contract(N1, N2, x)
    determinant = overlap_determinant(N1, N2, x)
    a, b = contract.value, determinant.value
    if b == 0:
        sign = 1 if a == 0 else 0
    else:
        sign = 1 if a == b else (-1 if a == -b else 0)
    record = {
        'N1': N1,
        'N2': N2,
        'x': x,
        'contraction': a,
        'determinant': b,
        'sign': sign,
        'abs_equal': abs(a) == abs(b),
        'positive': b > 0 if not both_odd(N1, N2) else None,
    }
    if not both_odd(N1, N2):
        F_c = lbf(N1, N2, x, route='contraction').ratio
        F_d = lbf(N1, N2, x, route='determinant').ratio
        record['lbf_equal'] = F_c == F_d
    return record


def ao_polynomial(n: int) -> IntPolynomial:
    """Σ_{i=0}^{2n} A_O(2n+2, i+2) x^i."""
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    return IntPolynomial([a_o(2 * n + 2, i + 2) for i in range(2 * n + 1)])


def check_ao_identity(n: int) -> bool:
    """The mixed-parity determinant of size n expands in refined A_O counts."""
    return poly_det(polynomial_matrix(n, EVEN)) == ao_polynomial(n)
