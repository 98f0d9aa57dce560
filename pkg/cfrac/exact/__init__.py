"""
Exact arithmetic

- integers.py: isqrt, exact surd signs, parity signs
- gaussian.py: Gaussian integers / rationals and Hurwitz rounding
- quadratic.py: elements u + v*sqrt(N) of a quadratic extension
- matrix.py: 2x2 matrices, unimodular inverses, linear combinations
"""

from .integers import isqrt, parity_sign, rational_sqrt, sign, sign_of_surd
from .gaussian import (
    IOTA,
    GaussianInt,
    GaussianRational,
    gauss_round,
    gaussian_isqrt,
)
from .quadratic import QuadExtElem
from .matrix import Mat2, lin_comb, mat_inv_unimodular, mat_mul, mat_pow

__all__ = [
    'isqrt',
    'parity_sign',
    'rational_sqrt',
    'sign',
    'sign_of_surd',
    'IOTA',
    'GaussianInt',
    'GaussianRational',
    'gauss_round',
    'gaussian_isqrt',
    'QuadExtElem',
    'Mat2',
    'lin_comb',
    'mat_inv_unimodular',
    'mat_mul',
    'mat_pow',
]
