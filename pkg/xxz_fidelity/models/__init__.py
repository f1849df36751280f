"""
models/__init__.py

Physical models: the open XXZ chain with diagonal boundary fields, the
six-vertex R- and K-matrices, the boundary qKZ vector and the
generalised overlap built from it.
"""

from .spin_chain import (
    SectorBasis,
    SectorHamiltonian,
    GroundStateVector,
    build_hamiltonian,
    ground_energy,
    ground_state,
    ground_state_float,
)
from .vertex_model import RMatrix, KMatrix, r_matrix, k_matrix
from .qkz import QkzVector, XiMap, qkz_vector
from .omega import omega, verify_omega_lemmas, verify_omega_theorem

__all__ = [
    'SectorBasis',
    'SectorHamiltonian',
    'GroundStateVector',
    'build_hamiltonian',
    'ground_energy',
    'ground_state',
    'ground_state_float',
    'RMatrix',
    'KMatrix',
    'r_matrix',
    'k_matrix',
    'QkzVector',
    'XiMap',
    'qkz_vector',
    'omega',
    'verify_omega_lemmas',
    'verify_omega_theorem',
]
