"""
xxz_fidelity

Exact and asymptotic logarithmic bipartite fidelity of the open XXZ chain
at Δ = -1/2 with diagonal boundary fields: ground states, overlaps,
symplectic characters, the boundary qKZ vector behind them and the
large-N series.
"""

__version__ = "0.1.0"

from .errors import (
    FidelityError,
    ArgumentError,
    IllDefinedError,
    UnsupportedError,
    DegenerateKernelError,
    NormalizationError,
    ConsistencyError,
    NumericalFailure,
)
from .config import RunConfig
from .numerics import precision, parse_rational
from .overlap import lbf, overlap_contract, overlap_determinant, compare_routes
from .characters import chi_ratio, chi_specialized, normalized_chi
from .asymptotics import lbf_asymptotic, compare_finite_size

__all__ = [
    '__version__',
    'FidelityError',
    'ArgumentError',
    'IllDefinedError',
    'UnsupportedError',
    'DegenerateKernelError',
    'NormalizationError',
    'ConsistencyError',
    'NumericalFailure',
    'RunConfig',
    'precision',
    'parse_rational',
    'lbf',
    'overlap_contract',
    'overlap_determinant',
    'compare_routes',
    'chi_ratio',
    'chi_specialized',
    'normalized_chi',
    'lbf_asymptotic',
    'compare_finite_size',
]
