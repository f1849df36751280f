"""
qkz.py

The boundary qKZ vector |Ψ_N⟩ for N ≤ 3, the singlet-insertion maps Ξ and
the exchange, reflection and reduction relations.

Components are generated from the factorised component ↓ⁿ↑ⁿ̄ by solving the
exchange relations: a ↓↑ -> ↑↓ move at sites (a, b) gives
Ψ_{..↑↓..} = ([q z_b/z_a]·Ψ_{..↓↑..}(z_a <-> z_b) - [q]·Ψ_{..↓↑..}) / [z_a/z_b],
with the division certified exact.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional
import logging

from ..algebra import ExactScalar, MultiLaurent, bracket, product
from ..combinatorics import nu
from ..errors import ArgumentError, UnsupportedError
from .spin_chain import (
    DOWN,
    UP,
    SectorBasis,
    Word,
    apply_hamiltonian,
    build_hamiltonian,
    ground_energy,
    word_str,
)
from .vertex_model import (
    BETA,
    COMBINATORIAL_T,
    T,
    Residual,
    Vector,
    apply_two_site,
    beta_mono,
    k_matrix,
    layout_size,
    q_mono,
    r_matrix,
    t_mono,
    vector_difference,
    z_mono,
    z_slot,
)

logger = logging.getLogger(__name__)

MAX_N = 3


@dataclass
class QkzVector:
    """
    Nonzero components of |Ψ_N⟩ as Laurent polynomials.

    Attributes:
        N: Chain length
        nvars: Number of variable slots of the components
        components: Spin word -> component
    """

    N: int
    nvars: int
    components: Dict[Word, MultiLaurent] = field(default_factory=dict)

    def component(self, word: Word) -> MultiLaurent:
        return self.components.get(tuple(word), MultiLaurent.zero(self.nvars))

    def map(self, fn) -> 'QkzVector':
        out = {w: fn(c) for w, c in self.components.items()}
        return QkzVector(self.N, self.nvars, {w: c for w, c in out.items() if not c.is_zero()})

    def substitute(self, mapping: Mapping[int, MultiLaurent]) -> 'QkzVector':
        return self.map(lambda c: c.substitute_monomials(mapping))

    def embed(self, nvars: int, z_targets: Mapping[int, int]) -> 'QkzVector':
        """
        Move the components into a larger layout.

        Args:
            nvars: Slot count of the target layout
            z_targets: 1-based index i of z_i -> target slot
        """
        slot_map = {T: T, BETA: BETA}
        slot_map.update({z_slot(i): s for i, s in z_targets.items()})
        out = QkzVector(self.N, nvars)
        out.components = {w: c.relabel(nvars, slot_map) for w, c in self.components.items()}
        return out

    def as_vector(self) -> Vector:
        return dict(self.components)


def base_word(N: int) -> Word:
    n = N // 2
    return (DOWN,) * n + (UP,) * (N - n)


def base_component(N: int) -> MultiLaurent:
    """
    ∏_{i≤n}[βz_i] ∏_{i<j≤n}[qz_j/z_i][qz_iz_j] ∏_{n<i<j≤N}[qz_j/z_i][q²z_iz_j].
    """
    nv = layout_size(N)
    n = N // 2
    beta, q = beta_mono(nv), q_mono(nv)
    z = [None] + [z_mono(nv, i) for i in range(1, N + 1)]
    factors = [bracket(beta * z[i]) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors.append(bracket(q * z[j] * z[i].inverse_monomial()))
            factors.append(bracket(q * z[i] * z[j]))
    for i in range(n + 1, N + 1):
        for j in range(i + 1, N + 1):
            factors.append(bracket(q * z[j] * z[i].inverse_monomial()))
            factors.append(bracket(q * q * z[i] * z[j]))
    return product(factors, nv)


@lru_cache(maxsize=None)
def qkz_vector(N: int) -> QkzVector:
    """
    |Ψ_N⟩ for 0 ≤ N ≤ 3.

    Raises:
        UnsupportedError: For N ≥ 4
    """
    if N < 0:
        raise ArgumentError(f"N must be non-negative, got {N}")
    if N > MAX_N:
        raise UnsupportedError(f"qKZ vector is constructed for N <= {MAX_N} only")
    nv = layout_size(N)
    q = q_mono(nv)
    start = base_word(N)
    components = {start: base_component(N)}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for k in range(N - 1):
            if word[k] != DOWN or word[k + 1] != UP:
                continue
            target = word[:k] + (UP, DOWN) + word[k + 2:]
            if target in components:
                continue
            a, b = k + 1, k + 2
            za, zb = z_mono(nv, a), z_mono(nv, b)
            d = components[word]
            numerator = bracket(q * zb * za.inverse_monomial()) * d.swap(z_slot(a), z_slot(b)) \
                - bracket(q) * d
            components[target] = numerator.exact_divide(
                bracket(za * zb.inverse_monomial()), z_slot(a))
            queue.append(target)
    logger.debug("qKZ vector N=%d: %d components", N, len(components))
    return QkzVector(N, nv, {w: c for w, c in components.items() if not c.is_zero()})


@dataclass(frozen=True)
class XiMap:
    """Ξ_N^i : V^{N-2} -> V^N, inserting |s⟩ at sites (i, i+1), 1-based."""

    N: int
    i: int

    def __post_init__(self):
        if self.N < 2 or not 1 <= self.i <= self.N - 1:
            raise ArgumentError(f"Ξ_{self.N}^{self.i} is not defined")

    def apply(self, vector: Mapping[Word, Any]) -> Dict[Word, Any]:
        out: Dict[Word, Any] = {}
        cut = self.i - 1
        for word, c in vector.items():
            for pair, sign in (((UP, DOWN), 1), ((DOWN, UP), -1)):
                new = word[:cut] + pair + word[cut:]
                out[new] = c if sign > 0 else -c
        return out

    def is_injective(self) -> bool:
        images = set()
        for word in _words(self.N - 2):
            image = frozenset(self.apply({word: 1}).items())
            if image in images:
                return False
            images.add(image)
        return True


def _words(length: int) -> List[Word]:
    words: List[Word] = [()]
    for _ in range(length):
        words = [w + (s,) for w in words for s in (UP, DOWN)]
    return words


def _collect(residual: Residual, label: str, difference: Vector) -> None:
    for w, c in difference.items():
        residual[f"{label}:{word_str(w)}"] = c


def exchange_residual(psi: QkzVector, i: int) -> Residual:
    """Ř_{i,i+1}(z_i/z_{i+1})Ψ - Ψ(z_i <-> z_{i+1}) for any candidate Ψ, cleared by [q z_{i+1}/z_i]."""
    if not 1 <= i <= psi.N - 1:
        raise ArgumentError(f"exchange position {i} outside 1..{psi.N - 1}")
    nv = psi.nvars
    R = r_matrix(z_mono(nv, i) * z_mono(nv, i + 1, -1))
    lhs = apply_two_site(R.numerator_matrix(), psi.as_vector(), i - 1)
    swapped = psi.map(lambda c: R.denominator * c.swap(z_slot(i), z_slot(i + 1)))
    residual: Residual = {}
    _collect(residual, f"exchange {i}", vector_difference(lhs, swapped.as_vector()))
    return residual


def verify_exchange(N: int, i: int) -> Residual:
    return exchange_residual(qkz_vector(N), i)


def verify_reflection(N: int, side: str) -> Residual:
    """
    Left: K_1(z_1^{-1}; β)Ψ = Ψ(z_1^{-1}, …).
    Right: K_N(s z_N; s q^{-1} β^{-1})Ψ = Ψ(…, s^{-2} z_N^{-1}), s = t³.
    Both are checked as numerator·Ψ - denominator·Ψ' per component.
    """
    if not 1 <= N <= MAX_N:
        raise ArgumentError(f"reflection check needs 1 <= N <= {MAX_N}")
    psi = qkz_vector(N)
    nv = psi.nvars
    if side == 'left':
        site, slot = 0, z_slot(1)
        K = k_matrix(z_mono(nv, 1, -1), beta_mono(nv))
        image = z_mono(nv, 1, -1)
    elif side == 'right':
        site, slot = N - 1, z_slot(N)
        K = k_matrix(t_mono(nv, 3) * z_mono(nv, N), t_mono(nv) * beta_mono(nv, -1))
        image = t_mono(nv, -6) * z_mono(nv, N, -1)
    else:
        raise ArgumentError(f"side must be 'left' or 'right', got {side!r}")
    diagonal = K.numerator_diagonal()
    residual: Residual = {}
    for word, c in psi.components.items():
        moved = c.substitute_monomials({slot: image})
        diff = diagonal[word[site]] * c - K.denominator * moved
        if not diff.is_zero():
            residual[f"{side}:{word_str(word)}"] = diff
    return residual


def _reduction_prefactor(N: int, i: int, nv: int) -> MultiLaurent:
    """(-1)^{n+i+1}[βz_i]∏_{j<i}[qz_i/z_j][qz_iz_j]∏_{j≥i+2}[q²z_j/z_i][qz_iz_j]."""
    q, beta = q_mono(nv), beta_mono(nv)
    zi = z_mono(nv, i)
    factors = [bracket(beta * zi)]
    for j in range(1, i):
        zj = z_mono(nv, j)
        factors += [bracket(q * zi * zj.inverse_monomial()), bracket(q * zi * zj)]
    for j in range(i + 2, N + 1):
        zj = z_mono(nv, j)
        factors += [bracket(q * q * zj * zi.inverse_monomial()), bracket(q * zi * zj)]
    sign = -1 if (N // 2 + i + 1) % 2 else 1
    return sign * product(factors, nv)


def verify_reduction(N: int, i: int) -> Residual:
    """
    Ψ_N at z_{i+1} = q^{-1}z_i against the singlet insertion of Ψ_{N-2}.

    N = 2 checks Ψ_2(z_1, q^{-1}z_1) + [βz_1]|s⟩ = 0.
    """
    if not 2 <= N <= MAX_N or not 1 <= i <= N - 1:
        raise ArgumentError(f"reduction check needs 2 <= N <= {MAX_N} and 1 <= i <= N-1")
    psi = qkz_vector(N)
    nv = psi.nvars
    special = psi.substitute({z_slot(i + 1): q_mono(nv, -1) * z_mono(nv, i)})
    remaining = [j for j in range(1, N + 1) if j not in (i, i + 1)]
    smaller = qkz_vector(N - 2).embed(nv, {k: z_slot(j) for k, j in enumerate(remaining, 1)})
    prefactor = _reduction_prefactor(N, i, nv)
    rhs = XiMap(N, i).apply({w: prefactor * c for w, c in smaller.components.items()})
    residual: Residual = {}
    _collect(residual, f"reduction {i}", vector_difference(special.as_vector(), rhs))
    return residual


def verify_singlet_transport(z_index: int = 1) -> Residual:
    """
    Moving a singlet one step with two Ř-matrices, N = 3, i = 2:
    Ř₂₃(qz)Ř₁₂(z)Ξ²v = -([q²z]/[q/z])Ξ¹v and Ř₁₂(qz)Ř₂₃(z)Ξ¹v = -([q²z]/[q/z])Ξ²v,
    cleared by [1/z][q/z].
    """
    nv = layout_size(3)
    q = q_mono(nv)
    z = z_mono(nv, z_index)
    R_z = r_matrix(z).numerator_matrix()
    R_qz = r_matrix(q * z).numerator_matrix()
    factor = bracket(q * q * z) * bracket(z.inverse_monomial())
    xi1, xi2 = XiMap(3, 1), XiMap(3, 2)
    one = MultiLaurent.constant(nv)
    residual: Residual = {}
    for v in (UP, DOWN):
        basis = {(v,): one}
        upper = apply_two_site(R_qz, apply_two_site(R_z, xi2.apply(basis), 0), 1)
        target = {w: -factor * c for w, c in xi1.apply(basis).items()}
        _collect(residual, f"forward {word_str((v,))}", vector_difference(upper, target))
        lower = apply_two_site(R_qz, apply_two_site(R_z, xi1.apply(basis), 1), 0)
        target = {w: -factor * c for w, c in xi2.apply(basis).items()}
        _collect(residual, f"backward {word_str((v,))}", vector_difference(lower, target))
    return residual


def homogeneous_limit(N: int, beta: Any) -> Dict[Word, ExactScalar]:
    """
    ψ_N = (-1)^{n(n-1)/2} 3^{-ν_N} [β]^{-n} Ψ_N(1,…,1; β) at q = ω.
    """
    if not 1 <= N <= MAX_N:
        raise ArgumentError(f"homogeneous limit needs 1 <= N <= {MAX_N}")
    beta = ExactScalar.coerce(beta)
    psi = qkz_vector(N)
    n = N // 2
    bracket_beta = beta - beta.inverse()
    if bracket_beta.is_zero():
        raise ArgumentError("[β] must be nonzero")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    norm = sign * Fraction(1, 3 ** nu(N)) * bracket_beta ** (-n)
    point = [COMBINATORIAL_T, beta] + [ExactScalar(1)] * N
    return {w: norm * c.evaluate(point) for w, c in psi.components.items()}


def x_from_beta(beta: Any) -> ExactScalar:
    """x = -[βq]/[β] at q = ω."""
    beta = ExactScalar.coerce(beta)
    bq = beta * ExactScalar.omega()
    return -(bq - bq.inverse()) / (beta - beta.inverse())


def verify_homogeneous_limit(N: int, beta: Any) -> Dict[str, Any]:
    """
    Check that the homogeneous limit is the normalised chain ground state.

    Returns:
        Record with x, the base component, the eigen-equation residual
        and the gauge relating ψ to the kernel normalisation
    """
    psi = homogeneous_limit(N, beta)
    x = x_from_beta(beta)
    basis = SectorBasis.build(N)
    vector = [psi.get(w, ExactScalar(0)) for w in basis.states]
    H = build_hamiltonian(N, x)
    E0 = ground_energy(N, x)
    Hv = apply_hamiltonian(H, vector)
    residual = [h - E0 * v for h, v in zip(Hv, vector)]
    base = vector[basis.base_index]
    eigen = all(ExactScalar.coerce(r).is_zero() for r in residual)
    stray = [word_str(w) for w in psi if w not in basis.index and not psi[w].is_zero()]
    return {
        'N': N,
        'x': str(x),
        'base_component': str(base),
        'eigen_residual_zero': eigen,
        'outside_sector': stray,
        'gauge': '+1' if eigen and base == 1 else 'undetermined',
        'components': {word_str(w): str(v) for w, v in zip(basis.states, vector)},
    }
