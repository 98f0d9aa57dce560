"""
Chebyshev-type recurrence families

- families.py: the families as (coefficient, sign, seeds) recurrences
- evaluation.py: naive, matrix-power and halve-and-square evaluation
- identities.py: identity checks and the randomized suite
"""

from .families import FAMILIES, RecurrenceFamily, get_family, signed
from .evaluation import (
    ChebMatrixState,
    companion,
    eval_halve_square,
    eval_matrix_power,
    eval_naive,
    matrix_power_state,
    signed_dilated_T,
    signed_T,
    signed_U,
)
from .identities import IDENTITY_TAGS, check_identity, random_unimodular, run_identity_suite

__all__ = [
    'FAMILIES',
    'RecurrenceFamily',
    'get_family',
    'signed',
    'ChebMatrixState',
    'companion',
    'eval_halve_square',
    'eval_matrix_power',
    'eval_naive',
    'matrix_power_state',
    'signed_dilated_T',
    'signed_T',
    'signed_U',
    'IDENTITY_TAGS',
    'check_identity',
    'random_unimodular',
    'run_identity_suite',
]
