"""
vertex_model.py

Six-vertex Ř-matrix and diagonal K-matrix with cleared denominators, local
operator actions on V^N and the Yang-Baxter type identities they satisfy.

Variable layout of every Laurent polynomial in the vertex-model code:
slot 0 is t (q = t², s = t³), slot 1 is β, slot 1+i is z_i.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from ..algebra import MultiLaurent, OMEGA, bracket
from ..errors import ArgumentError
from .spin_chain import DOWN, UP, Word, word_str

logger = logging.getLogger(__name__)

T, BETA = 0, 1

# t = 1 + ω is a primitive sixth root of unity: q = t² = ω, s = t³ = -1
COMBINATORIAL_T = 1 + OMEGA

Vector = Dict[Word, MultiLaurent]
Residual = Dict[str, MultiLaurent]


def z_slot(i: int) -> int:
    """Slot of z_i (1-based)."""
    return 1 + i


def layout_size(N: int) -> int:
    return 2 + N


def t_mono(nvars: int, k: int = 1) -> MultiLaurent:
    return MultiLaurent.monomial(nvars, {T: k})


def q_mono(nvars: int, k: int = 1) -> MultiLaurent:
    return MultiLaurent.monomial(nvars, {T: 2 * k})


def beta_mono(nvars: int, k: int = 1) -> MultiLaurent:
    return MultiLaurent.monomial(nvars, {BETA: k})


def z_mono(nvars: int, i: int, k: int = 1) -> MultiLaurent:
    return MultiLaurent.monomial(nvars, {z_slot(i): k})


def _require_monomial(value: MultiLaurent, label: str) -> None:
    if not value.is_monomial():
        raise ArgumentError(f"{label} must be a nonzero Laurent monomial")


@dataclass(frozen=True)
class RMatrix:
    """
    Ř(z) on V⊗V in the basis ↑↑, ↑↓, ↓↑, ↓↓, stored as numerators over [q/z]:
    a = [qz], b = [z], c = [q] with rows (a), (c b), (b c), (a).
    """

    argument: MultiLaurent
    a: MultiLaurent
    b: MultiLaurent
    c: MultiLaurent
    denominator: MultiLaurent

    def numerator_matrix(self) -> List[List[Optional[MultiLaurent]]]:
        a, b, c = self.a, self.b, self.c
        return [
            [a, None, None, None],
            [None, c, b, None],
            [None, b, c, None],
            [None, None, None, a],
        ]


def r_matrix(z: MultiLaurent) -> RMatrix:
    _require_monomial(z, "spectral argument")
    q = q_mono(z.nvars)
    return RMatrix(z, bracket(q * z), bracket(z), bracket(q), bracket(q * z.inverse_monomial()))


@dataclass(frozen=True)
class KMatrix:
    """K(z; β) = diag(1, [βz]/[β/z]) as numerators (up, down) over [β/z]."""

    argument: MultiLaurent
    beta: MultiLaurent
    up: MultiLaurent
    down: MultiLaurent
    denominator: MultiLaurent

    def numerator_diagonal(self) -> Tuple[MultiLaurent, MultiLaurent]:
        return self.up, self.down


def k_matrix(z: MultiLaurent, beta: MultiLaurent) -> KMatrix:
    _require_monomial(z, "spectral argument")
    _require_monomial(beta, "boundary parameter")
    over = bracket(beta * z.inverse_monomial())
    return KMatrix(z, beta, over, bracket(beta * z), over)


def _accumulate(out: Vector, word: Word, term: MultiLaurent) -> None:
    current = out.get(word)
    out[word] = term if current is None else current + term


def _clean(vector: Vector) -> Vector:
    return {w: c for w, c in vector.items() if not c.is_zero()}


def apply_two_site(matrix: Sequence[Sequence[Optional[MultiLaurent]]],
                   vector: Vector, site: int) -> Vector:
    """Act with a 4×4 matrix on sites (site, site+1), 0-based."""
    out: Vector = {}
    for word, coeff in vector.items():
        col = 2 * word[site] + word[site + 1]
        for row in range(4):
            entry = matrix[row][col]
            if entry is None or entry.is_zero():
                continue
            new = word[:site] + (row >> 1, row & 1) + word[site + 2:]
            _accumulate(out, new, entry * coeff)
    return _clean(out)


def apply_one_site(diagonal: Tuple[MultiLaurent, MultiLaurent], vector: Vector, site: int) -> Vector:
    """Act with a diagonal 2×2 matrix on one site."""
    return _clean({w: diagonal[w[site]] * c for w, c in vector.items()})


def scale(vector: Vector, factor: MultiLaurent) -> Vector:
    return _clean({w: factor * c for w, c in vector.items()})


def basis_vector(word: Word, nvars: int) -> Vector:
    return {tuple(word): MultiLaurent.constant(nvars)}


def singlet(nvars: int) -> Vector:
    """|s⟩ = |↑↓⟩ - |↓↑⟩."""
    one = MultiLaurent.constant(nvars)
    return {(UP, DOWN): one, (DOWN, UP): -one}


def vector_difference(lhs: Vector, rhs: Vector) -> Vector:
    out = dict(lhs)
    for w, c in rhs.items():
        _accumulate(out, w, -c)
    return _clean(out)


def _all_words(length: int) -> List[Word]:
    words: List[Word] = [()]
    for _ in range(length):
        words = [w + (s,) for w in words for s in (UP, DOWN)]
    return words


def _collect(residual: Residual, label: str, difference: Vector) -> None:
    for w, c in difference.items():
        residual[f"{label}->{word_str(w)}"] = c


def verify_braid_ybe() -> Residual:
    """Ř₁₂(z/w)Ř₂₃(z)Ř₁₂(w) - Ř₂₃(w)Ř₁₂(z)Ř₂₃(z/w) on V³ (cleared)."""
    nv = layout_size(2)
    z, w = z_mono(nv, 1), z_mono(nv, 2)
    Rz = r_matrix(z).numerator_matrix()
    Rw = r_matrix(w).numerator_matrix()
    Rzw = r_matrix(z * w.inverse_monomial()).numerator_matrix()
    residual: Residual = {}
    for word in _all_words(3):
        e = basis_vector(word, nv)
        lhs = apply_two_site(Rzw, apply_two_site(Rz, apply_two_site(Rw, e, 0), 1), 0)
        rhs = apply_two_site(Rw, apply_two_site(Rz, apply_two_site(Rzw, e, 1), 0), 1)
        _collect(residual, word_str(word), vector_difference(lhs, rhs))
    return residual


def verify_boundary_ybe() -> Residual:
    """Ř(z/w)K₁(z)Ř(zw)K₁(w) - K₁(w)Ř(zw)K₁(z)Ř(z/w) on V² (cleared)."""
    nv = layout_size(2)
    z, w, beta = z_mono(nv, 1), z_mono(nv, 2), beta_mono(nv)
    R_ratio = r_matrix(z * w.inverse_monomial()).numerator_matrix()
    R_prod = r_matrix(z * w).numerator_matrix()
    Kz = k_matrix(z, beta).numerator_diagonal()
    Kw = k_matrix(w, beta).numerator_diagonal()
    residual: Residual = {}
    for word in _all_words(2):
        e = basis_vector(word, nv)
        lhs = apply_two_site(R_ratio, apply_one_site(
            Kz, apply_two_site(R_prod, apply_one_site(Kw, e, 0), 0), 0), 0)
        rhs = apply_one_site(Kw, apply_two_site(R_prod, apply_one_site(
            Kz, apply_two_site(R_ratio, e, 0), 0), 0), 0)
        _collect(residual, word_str(word), vector_difference(lhs, rhs))
    return residual


def verify_r_unitarity() -> Residual:
    """Ř(1/z)Ř(z) = 1, i.e. M(1/z)M(z) = [qz][q/z]·1 for the numerators."""
    nv = layout_size(1)
    z = z_mono(nv, 1)
    R = r_matrix(z)
    R_inv = r_matrix(z.inverse_monomial())
    norm = R.denominator * R_inv.denominator
    residual: Residual = {}
    for word in _all_words(2):
        e = basis_vector(word, nv)
        lhs = apply_two_site(R_inv.numerator_matrix(), apply_two_site(R.numerator_matrix(), e, 0), 0)
        _collect(residual, word_str(word), vector_difference(lhs, scale(e, norm)))
    return residual


def verify_k_inversion() -> Residual:
    """K(z)K(1/z) = 1 after clearing [β/z][βz]."""
    nv = layout_size(1)
    z, beta = z_mono(nv, 1), beta_mono(nv)
    K = k_matrix(z, beta)
    K_inv = k_matrix(z.inverse_monomial(), beta)
    norm = K.denominator * K_inv.denominator
    residual: Residual = {}
    for word in _all_words(1):
        e = basis_vector(word, nv)
        lhs = apply_one_site(K_inv.numerator_diagonal(), apply_one_site(K.numerator_diagonal(), e, 0), 0)
        _collect(residual, word_str(word), vector_difference(lhs, scale(e, norm)))
    return residual


def verify_singlet_projection() -> Residual:
    """Ř(q^{-1})|s⟩ = (2[q]/[q²])|s⟩; the numerator side reads M(q^{-1})|s⟩ = 2[q]|s⟩."""
    nv = layout_size(0)
    R = r_matrix(q_mono(nv, -1))
    s = singlet(nv)
    lhs = apply_two_site(R.numerator_matrix(), s, 0)
    rhs = scale(s, 2 * bracket(q_mono(nv)))
    residual: Residual = {}
    _collect(residual, "s", vector_difference(lhs, rhs))
    return residual


def verify_r_identity() -> Residual:
    """Ř(1) is the identity: a(1) = c(1) = 1, b(1) = 0."""
    nv = layout_size(0)
    R = r_matrix(MultiLaurent.constant(nv))
    residual: Residual = {}
    for word in _all_words(2):
        e = basis_vector(word, nv)
        lhs = apply_two_site(R.numerator_matrix(), e, 0)
        _collect(residual, word_str(word), vector_difference(lhs, scale(e, R.denominator)))
    return residual
