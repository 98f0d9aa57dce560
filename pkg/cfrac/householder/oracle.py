"""
Exact Householder step from derivatives of 1/f, f(x) = x^2 - N

1/f = (1/(2 sqrt N)) (1/(x - sqrt N) - 1/(x + sqrt N)), so
    (1/f)^(j)(x) = (-1)^j j! * v,  v = sqrt(N)-part of (x - sqrt N)^-(j+1)
and the step H(x) = x + d (1/f)^(d-1)(x) / (1/f)^(d)(x) stays rational.
"""

from __future__ import annotations

from math import factorial

from cfrac.errors import DerivativeZero
from cfrac.exact import GaussianRational, QuadExtElem, parity_sign

from .config import HouseholderConfig


def reciprocal_derivative(x, N, j: int):
    """(1/f)^(j)(x) for f = x^2 - N"""
    if j < 0:
        raise ValueError(f"Derivative order must be >= 0, got {j}")
    if x * x - N == 0:
        raise DerivativeZero(f"f vanishes at {x}")
    w = QuadExtElem(x, -1, N) ** -(j + 1)
    return parity_sign(j) * factorial(j) * w.v


def householder_oracle(x, cfg: HouseholderConfig):
    """
    H(x) for the order-d Householder method, exactly

    Raises:
        DerivativeZero: (1/f)^(d)(x) = 0, or f(x) = 0
    """
    if cfg.is_gaussian:
        x = GaussianRational.coerce(x)
    lower = reciprocal_derivative(x, cfg.N, cfg.d - 1)
    upper = reciprocal_derivative(x, cfg.N, cfg.d)
    if upper == 0:
        raise DerivativeZero(f"Derivative of order {cfg.d} of 1/f vanishes at {x}")
    return x + cfg.d * lower / upper
