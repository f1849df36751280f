"""
spin_chain.py

Open XXZ chain at Δ = -1/2 with diagonal boundary fields, restricted to
the sector of magnetisation 0 (even N) or +1/2 (odd N).

H = -1/2 Σ (σˣσˣ + σʸσʸ - 1/2 σᶻσᶻ) + p σ₁ᶻ + p̄ σ_Nᶻ,
p = (1/2 - x)/2, p̄ = (1/2 - 1/x)/2. The ground energy is known in closed
form, so the ground state is the exact kernel of H - E₀.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import ArpackNoConvergence, eigsh
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..algebra import ExactScalar
from ..errors import (
    ArgumentError,
    ConsistencyError,
    DegenerateKernelError,
    NormalizationError,
    NumericalFailure,
)

logger = logging.getLogger(__name__)

UP, DOWN = 0, 1
Word = Tuple[int, ...]

# Sector dimension up to which the float route uses a dense solver
DENSE_LIMIT = 64


def word_str(word: Sequence[int]) -> str:
    """Render a spin word with arrows."""
    return ''.join('↑' if s == UP else '↓' for s in word)


def parse_word(text: str) -> Word:
    """Inverse of word_str; also accepts 'u'/'d'."""
    table = {'↑': UP, 'u': UP, 'U': UP, '↓': DOWN, 'd': DOWN, 'D': DOWN}
    try:
        return tuple(table[c] for c in text)
    except KeyError:
        raise ArgumentError(f"invalid spin word {text!r}")


def word_magnetization(word: Sequence[int]) -> Fraction:
    return Fraction(sum(1 if s == UP else -1 for s in word), 2)


def check_x(x: Any, allow_cyclotomic: bool = False) -> Any:
    """
    Validate the boundary parameter.

    Returns:
        x as Fraction, or as ExactScalar when cyclotomic values are allowed

    Raises:
        ArgumentError: If x is not a positive rational (or an allowed Q(ω) value)
    """
    if isinstance(x, ExactScalar):
        if x.is_rational:
            x = x.to_fraction()
        elif allow_cyclotomic:
            if x.is_zero():
                raise ArgumentError("x must be nonzero")
            return x
        else:
            raise ArgumentError(f"x must be rational, got {x}")
    if isinstance(x, float) or not isinstance(x, (int, Fraction)):
        raise ArgumentError(f"x must be an exact rational, got {x!r}")
    x = Fraction(x)
    if x <= 0:
        raise ArgumentError(f"x must be positive, got {x}")
    return x


@dataclass(frozen=True)
class SectorBasis:
    """
    Spin words with n = ⌊N/2⌋ down spins, ordered lexicographically with ↑ < ↓.

    Attributes:
        N: Number of sites
        states: Ordered spin words
    """

    N: int
    states: Tuple[Word, ...] = field(repr=False)
    index: Dict[Word, int] = field(repr=False, compare=False)

    @classmethod
    def build(cls, N: int) -> 'SectorBasis':
        if N < 0:
            raise ArgumentError(f"N must be non-negative, got {N}")
        n = N // 2
        states = []
        for downs in combinations(range(N), n):
            word = [UP] * N
            for k in downs:
                word[k] = DOWN
            states.append(tuple(word))
        states.sort()
        return cls(N, tuple(states), {w: k for k, w in enumerate(states)})

    @property
    def n_down(self) -> int:
        return self.N // 2

    @property
    def magnetization(self) -> Fraction:
        return Fraction(self.N % 2, 2)

    @property
    def base_word(self) -> Word:
        """↓…↓↑…↑ with n downs first."""
        n = self.n_down
        return (DOWN,) * n + (UP,) * (self.N - n)

    @property
    def base_index(self) -> int:
        return self.index[self.base_word]

    def __len__(self) -> int:
        return len(self.states)


@dataclass
class SectorHamiltonian:
    """Sparse symmetric sector matrix with exact entries (rows as dicts)."""

    N: int
    x: Any
    basis: SectorBasis
    rows: List[Dict[int, Any]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def entry(self, i: int, j: int) -> Any:
        return self.rows[i].get(j, 0)

    def is_symmetric(self) -> bool:
        return all(self.rows[j].get(i, 0) == v
                   for i, row in enumerate(self.rows) for j, v in row.items())

    def to_scipy(self) -> csr_matrix:
        """Float CSR copy (rational x only)."""
        data, ri, ci = [], [], []
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                ri.append(i)
                ci.append(j)
                data.append(float(v))
        return csr_matrix((data, (ri, ci)), shape=(self.dimension, self.dimension))


@dataclass
class GroundStateVector:
    """Exact ground state with base component 1."""

    N: int
    x: Fraction
    basis: SectorBasis
    components: List[Fraction]

    def component(self, word: Sequence[int]) -> Fraction:
        return self.components[self.basis.index[tuple(word)]]

    def as_dict(self) -> Dict[str, str]:
        """Arrow-word -> "p/q" strings, for JSON output."""
        return {word_str(w): f"{c.numerator}/{c.denominator}"
                for w, c in zip(self.basis.states, self.components)}


def boundary_fields(x: Any) -> Tuple[Any, Any]:
    """(p, p̄) as exact values."""
    half = Fraction(1, 2)
    return (half - x) / 2, (half - 1 / x) / 2


def build_hamiltonian(N: int, x: Any) -> SectorHamiltonian:
    """
    Sector-restricted Hamiltonian.

    Args:
        N: Number of sites, N >= 1
        x: Positive rational, or a nonzero Q(ω) value

    Returns:
        SectorHamiltonian with hopping entries -1 and exact diagonal

    Raises:
        ArgumentError: If N < 1 or x is invalid
    """
    if N < 1:
        raise ArgumentError(f"N must be at least 1, got {N}")
    x = check_x(x, allow_cyclotomic=True)
    p, p_bar = boundary_fields(x)
    basis = SectorBasis.build(N)
    rows: List[Dict[int, Any]] = []
    for word in basis.states:
        spins = [1 if s == UP else -1 for s in word]
        diag = Fraction(sum(spins[k] * spins[k + 1] for k in range(N - 1)), 4)
        diag = p * spins[0] + p_bar * spins[-1] + diag
        row: Dict[int, Any] = {}
        if diag != 0:
            row[basis.index[word]] = diag
        for k in range(N - 1):
            if word[k] != word[k + 1]:
                flipped = list(word)
                flipped[k], flipped[k + 1] = word[k + 1], word[k]
                row[basis.index[tuple(flipped)]] = -1
        rows.append(row)
    logger.debug("built sector Hamiltonian N=%d dim=%d", N, len(basis))
    return SectorHamiltonian(N, x, basis, rows)


def ground_energy(N: int, x: Any) -> Any:
    """E₀ = -(3N-1)/4 - (1-x)²/(2x), exact."""
    if N < 1:
        raise ArgumentError(f"N must be at least 1, got {N}")
    x = check_x(x, allow_cyclotomic=True)
    return -Fraction(3 * N - 1, 4) - (1 - x) * (1 - x) / (2 * x)


def apply_hamiltonian(H: SectorHamiltonian, vector: Sequence[Any]) -> List[Any]:
    """Exact product H·v."""
    if len(vector) != H.dimension:
        raise ArgumentError("vector length does not match the sector dimension")
    out = []
    for row in H.rows:
        acc: Any = 0
        for j, v in row.items():
            acc = acc + v * vector[j]
        out.append(acc)
    return out


def magnetization(basis: SectorBasis, vector: Sequence[Any]) -> Fraction:
    """
    Common magnetisation of the nonzero components.

    Raises:
        ConsistencyError: If nonzero components carry different magnetisations
    """
    values = {word_magnetization(w) for w, c in zip(basis.states, vector) if c != 0}
    if len(values) != 1:
        raise ConsistencyError(f"vector has mixed magnetisation {sorted(values)}")
    return values.pop()


def ground_state(N: int, x: Any, check_positive: bool = True) -> GroundStateVector:
    """
    Exact ground state as the kernel of H - E₀ over the rationals.

    Args:
        N: Number of sites
        x: Positive rational
        check_positive: Certify that every component is strictly positive

    Returns:
        GroundStateVector normalised to base component 1

    Raises:
        DegenerateKernelError: If the kernel is not one-dimensional
        NormalizationError: If the base component of the kernel vector is 0
        ConsistencyError: If a component is not positive
    """
    x = check_x(x)
    H = build_hamiltonian(N, x)
    E0 = ground_energy(N, x)
    dim = H.dimension

    entries: Dict[int, Dict[int, Any]] = {}
    for i, row in enumerate(H.rows):
        shifted = dict(row)
        shifted[i] = shifted.get(i, 0) - E0
        entries[i] = {j: QQ(int(Fraction(v).numerator), int(Fraction(v).denominator))
                      for j, v in shifted.items() if v != 0}
    M = DomainMatrix({i: r for i, r in entries.items() if r}, (dim, dim), QQ)
    R, pivots = M.rref()
    free = sorted(set(range(dim)) - set(pivots))
    if len(free) != 1:
        raise DegenerateKernelError(
            f"kernel of H - E0 has dimension {len(free)} for N={N}, x={x}", len(free))
    f = free[0]
    rref_rows = R.to_sparse().rep
    vector = [Fraction(0)] * dim
    vector[f] = Fraction(1)
    for r, col in enumerate(pivots):
        v = rref_rows.get(r, {}).get(f)
        if v is not None:
            vector[col] = -Fraction(int(v.numerator), int(v.denominator))

    base = vector[H.basis.base_index]
    if base == 0:
        raise NormalizationError(f"base component vanishes for N={N}, x={x}")
    vector = [c / base for c in vector]

    residual = apply_hamiltonian(H, vector)
    if any(r != E0 * c for r, c in zip(residual, vector)):
        raise ConsistencyError(f"H·v != E0·v for N={N}, x={x}")
    if check_positive and any(c <= 0 for c in vector):
        raise ConsistencyError(f"ground state for N={N}, x={x} is not strictly positive")
    logger.info("ground state N=%d x=%s certified (dim %d)", N, x, dim)
    return GroundStateVector(N, x, H.basis, vector)


def ground_state_float(N: int, x: Any, tol: float = 1e-12,
                       maxiter: int = 10000) -> Tuple[np.ndarray, float]:
    """
    Lowest sector eigenpair in double precision.

    Dense diagonalisation for small sectors, Lanczos (``eigsh``) otherwise.

    Returns:
        (vector scaled to base component 1, energy)

    Raises:
        NumericalFailure: If Lanczos does not converge
    """
    x = check_x(x)
    H = build_hamiltonian(N, x)
    matrix = H.to_scipy()
    if H.dimension <= DENSE_LIMIT:
        values, vectors = np.linalg.eigh(matrix.toarray())
        energy, vec = float(values[0]), vectors[:, 0]
    else:
        try:
            values, vectors = eigsh(matrix, k=1, which='SA', tol=tol, maxiter=maxiter)
        except ArpackNoConvergence as e:
            raise NumericalFailure(f"Lanczos did not converge for N={N}, x={x}",
                                   data=list(e.eigenvalues))
        energy, vec = float(values[0]), vectors[:, 0]
    base = vec[H.basis.base_index]
    if abs(base) < 1e-300:
        raise NormalizationError(f"float base component vanishes for N={N}, x={x}")
    return vec / base, energy
