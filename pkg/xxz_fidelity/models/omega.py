"""
omega.py

Generalised overlap
Ω_{N1,N2} = ⟨Ψ_N(z_1^{-1},…,z_{N1}^{-1}, q^{-3}z_{N1+1}^{-1},…)| Ψ_{N1}(z_1..z_{N1}) ⊗ Ψ_{N2}(z_{N1+1}..z_N)⟩
with the transpose pairing, its structural identities and the character
formula at the combinatorial point.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional
import logging
import random

from ..algebra import ExactScalar, MultiLaurent, OMEGA, bracket, product
from ..characters import chi_ratio
from ..errors import ArgumentError, FidelityError, UnsupportedError
from .qkz import MAX_N, qkz_vector
from .vertex_model import (
    BETA,
    COMBINATORIAL_T,
    T,
    beta_mono,
    layout_size,
    q_mono,
    t_mono,
    z_mono,
    z_slot,
)

logger = logging.getLogger(__name__)


def _check_pair(N1: int, N2: int) -> None:
    if N1 < 0 or N2 < 0:
        raise ArgumentError(f"block sizes must be non-negative, got ({N1}, {N2})")
    if N1 + N2 > MAX_N:
        raise UnsupportedError(f"Ω is constructed for N1 + N2 <= {MAX_N} only")


@lru_cache(maxsize=None)
def omega(N1: int, N2: int) -> MultiLaurent:
    """
    Ω_{N1,N2} in the layout (t, β, z_1..z_N).

    Raises:
        UnsupportedError: If N1 + N2 > 3
    """
    _check_pair(N1, N2)
    N = N1 + N2
    nv = layout_size(N)
    if N1 % 2 and N2 % 2:
        return MultiLaurent.zero(nv)
    inverted = {z_slot(i): z_mono(nv, i, -1) for i in range(1, N1 + 1)}
    inverted.update({z_slot(i): t_mono(nv, -6) * z_mono(nv, i, -1) for i in range(N1 + 1, N + 1)})
    bra = qkz_vector(N).substitute(inverted)
    left = qkz_vector(N1).embed(nv, {k: z_slot(k) for k in range(1, N1 + 1)})
    right = qkz_vector(N2).embed(nv, {k: z_slot(N1 + k) for k in range(1, N2 + 1)})
    total = MultiLaurent.zero(nv)
    for w1, c1 in left.components.items():
        for w2, c2 in right.components.items():
            c = bra.components.get(w1 + w2)
            if c is not None:
                total = total + c * c1 * c2
    logger.debug("Ω_{%d,%d} has %d terms", N1, N2, len(total))
    return total


def _check(name: str, passed: bool, detail: str = '') -> Dict[str, Any]:
    return {'name': name, 'passed': bool(passed), 'detail': detail}


def _spatial_image(N1: int, N2: int) -> MultiLaurent:
    """Ω_{N2,N1}(s z_{N1+1..N}, s^{-1} z_{1..N1}; s q^{-1} β^{-1}) in the Ω_{N1,N2} layout."""
    N = N1 + N2
    nv = layout_size(N)
    mirrored = omega(N2, N1)
    mapping = {BETA: t_mono(nv) * beta_mono(nv, -1)}
    for k in range(1, N2 + 1):
        mapping[z_slot(k)] = t_mono(nv, 3) * z_mono(nv, N1 + k)
    for k in range(1, N1 + 1):
        mapping[z_slot(N2 + k)] = t_mono(nv, -3) * z_mono(nv, k)
    return mirrored.substitute_monomials(mapping)


def _reduction_rhs(N1: int, N2: int, i: int) -> MultiLaurent:
    """
    Cleared right side of Ω at z_1 = q^{-1}z_i:
    (-1)^{n+n1}[q²][βz_i][βq/z_i] ∏_{j≠1,i; j≤N1}[qz_i/z_j][q²/(z_iz_j)]
    ∏_{j≠1,i; j≤N}[q²z_j/z_i][qz_iz_j] · Ω_{N1-2,N2}(rest).
    """
    N = N1 + N2
    nv = layout_size(N)
    q, beta = q_mono(nv), beta_mono(nv)
    zi = z_mono(nv, i)
    zi_inv = zi.inverse_monomial()
    factors = [bracket(q * q), bracket(beta * zi), bracket(beta * q * zi_inv)]
    for j in range(2, N1 + 1):
        if j != i:
            zj = z_mono(nv, j)
            factors += [bracket(q * zi * zj.inverse_monomial()),
                        bracket(q * q * zi_inv * zj.inverse_monomial())]
    for j in range(2, N + 1):
        if j != i:
            zj = z_mono(nv, j)
            factors += [bracket(q * q * zj * zi_inv), bracket(q * zi * zj)]
    rest = [j for j in range(1, N + 1) if j not in (1, i)]
    slot_map = {T: T, BETA: BETA}
    slot_map.update({z_slot(k): z_slot(j) for k, j in enumerate(rest, 1)})
    smaller = omega(N1 - 2, N2).relabel(nv, slot_map)
    sign = -1 if (N // 2 + N1 // 2) % 2 else 1
    return sign * product(factors, nv) * smaller


def verify_omega_lemmas(N1: int, N2: int) -> List[Dict[str, Any]]:
    """
    Structural identities of Ω_{N1,N2}: parity, block symmetry, inversion,
    spatial reflection, centred width bound and the reduction at z_1 = q^{-1}z_i.

    Returns:
        One check record per identity
    """
    _check_pair(N1, N2)
    N = N1 + N2
    nv = layout_size(N)
    value = omega(N1, N2)
    checks = []

    parity = all(value.substitute_monomials({z_slot(i): -z_mono(nv, i)}) == value
                 for i in range(1, N + 1))
    checks.append(_check('parity', parity, 'even in every z_i'))

    swaps = [(i, i + 1) for i in range(1, N1)] + [(i, i + 1) for i in range(N1 + 1, N)]
    symmetric = all(value.swap(z_slot(a), z_slot(b)) == value for a, b in swaps)
    checks.append(_check('block_symmetry', symmetric, 'symmetric within each block'))

    inversion = True
    for i in range(1, N + 1):
        flipped = value.substitute_monomials({z_slot(i): z_mono(nv, i, -1)})
        if i <= N1:
            inversion &= flipped == value
        else:
            inversion &= flipped == value.substitute_monomials(
                {z_slot(i): t_mono(nv, -6) * z_mono(nv, i)})
    checks.append(_check('inversion', inversion, 'z_i -> 1/z_i (first block), q^{-3}z_i (second)'))

    checks.append(_check('spatial_reflection', _spatial_image(N1, N2) == value,
                         'block exchange with s = t^3'))

    if value.is_zero() or N1 == 0:
        checks.append(_check('width', True, 'trivial'))
    else:
        bound = 2 * (2 * N1 + N2 - 2)
        widths = [value.width(z_slot(i)) for i in range(1, N1 + 1)]
        centred = all(value.is_centred(z_slot(i)) for i in range(1, N1 + 1))
        checks.append(_check('width', centred and max(widths) <= bound,
                             f"widths {widths}, bound {bound}, centred {centred}"))

    if N1 >= 2:
        ok = True
        q_bracket = bracket(q_mono(nv))
        for i in range(2, N1 + 1):
            lhs = value.substitute_monomials({z_slot(1): q_mono(nv, -1) * z_mono(nv, i)})
            ok &= (q_bracket * lhs) == _reduction_rhs(N1, N2, i)
        checks.append(_check('reduction', ok, f"z_1 = q^-1 z_i, i = 2..{N1}"))
    return checks


def overlap_sign(N1: int, N2: int) -> int:
    """ε = (-1)^{n + n1 n2}."""
    n, n1, n2 = (N1 + N2) // 2, N1 // 2, N2 // 2
    return -1 if (n + n1 * n2) % 2 else 1


def omega_from_characters(N1: int, N2: int, zs: List[Any], beta: Any) -> ExactScalar:
    """ε χ_{N1}(z²) χ_{N2}(z²) χ_{N+1}(z², (β/q)²) at q = ω."""
    if N1 % 2 and N2 % 2:
        return ExactScalar(0)
    squares = [ExactScalar.coerce(z) ** 2 for z in zs]
    beta = ExactScalar.coerce(beta)
    last = beta * beta * OMEGA
    return (overlap_sign(N1, N2) * chi_ratio(squares[:N1]) * chi_ratio(squares[N1:])
            * chi_ratio(squares + [last]))


def verify_omega_theorem(N1: int, N2: int, samples: int = 200,
                         seed: Optional[int] = None) -> Dict[str, Any]:
    """
    Compare Ω_{N1,N2} with its character formula at t = 1 + ω on random
    rational points.

    Returns:
        Record with the number of samples used and of mismatches
    """
    _check_pair(N1, N2)
    N = N1 + N2
    value = omega(N1, N2)
    rng = random.Random(seed)
    used, mismatches, skipped = 0, 0, 0
    first_failure = None
    while used < samples:
        zs = [Fraction(rng.randint(2, 40), rng.randint(1, 9)) for _ in range(N)]
        beta = Fraction(rng.randint(2, 40), rng.randint(1, 9))
        try:
            expected = omega_from_characters(N1, N2, zs, beta)
        except (ArgumentError, ZeroDivisionError):
            skipped += 1
            if skipped > 10 * samples:
                raise FidelityError("could not draw admissible sample points")
            continue
        actual = value.evaluate([COMBINATORIAL_T, beta] + zs)
        used += 1
        if actual != expected:
            mismatches += 1
            if first_failure is None:
                first_failure = {'z': [str(z) for z in zs], 'beta': str(beta),
                                 'omega': str(actual), 'characters': str(expected)}
    logger.info("Ω_{%d,%d} character identity: %d/%d samples agree",
                N1, N2, used - mismatches, used)
    return {'samples': used, 'mismatches': mismatches, 'first_failure': first_failure}
