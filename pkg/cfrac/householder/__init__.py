"""
Householder iteration for f(x) = x^2 - N

- config.py: HouseholderConfig (order, radicand, period)
- closed_form.py: signed Chebyshev closed form, X-form, Newton composition
- oracle.py: exact derivative-based evaluation of the step
"""

from .config import HouseholderConfig
from .closed_form import householder_cheb, householder_X_form, newton_compose, ratio
from .oracle import householder_oracle, reciprocal_derivative

__all__ = [
    'HouseholderConfig',
    'householder_cheb',
    'householder_X_form',
    'newton_compose',
    'ratio',
    'householder_oracle',
    'reciprocal_derivative',
]
