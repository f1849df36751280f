"""
algebra/__init__.py

Exact arithmetic substrate: Q(ω) scalars, integer polynomials in x,
multivariate Laurent polynomials and fraction-free determinants.
"""

from .scalars import ExactScalar, OMEGA
from .polynomials import IntPolynomial, bareiss_det, field_det, leading_minors, poly_det
from .laurent import MultiLaurent, bracket, laurent_substitute, product

__all__ = [
    'ExactScalar',
    'OMEGA',
    'IntPolynomial',
    'bareiss_det',
    'field_det',
    'leading_minors',
    'poly_det',
    'MultiLaurent',
    'bracket',
    'laurent_substitute',
    'product',
]
