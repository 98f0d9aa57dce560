"""
Continued-fraction expansion

- surd.py: integer surd states and exact floors
- hurwitz_round.py: exact nearest-Gaussian-integer rounding of surds
- expansion.py: real / Hurwitz expansion with period detection
- convergents.py: convergent matrices by direct iteration, Pell check
"""

from .surd import SurdState, floor_surd, normalize_real
from .hurwitz_round import round_gaussian_surd, round_real_surd
from .expansion import (
    CFExpansion,
    check_galois_form,
    expand_hurwitz,
    expand_quadratic,
    expand_real,
    expand_surd,
    iter_quotients,
    reconstruct_real,
)
from .convergents import (
    ConvergentMatrix,
    iter_psi,
    pell_check,
    pell_positive,
    pell_solution,
    psi_naive,
    psi_prefix,
)

__all__ = [
    'SurdState',
    'floor_surd',
    'normalize_real',
    'round_gaussian_surd',
    'round_real_surd',
    'CFExpansion',
    'check_galois_form',
    'expand_hurwitz',
    'expand_quadratic',
    'expand_real',
    'expand_surd',
    'iter_quotients',
    'reconstruct_real',
    'ConvergentMatrix',
    'iter_psi',
    'pell_check',
    'pell_positive',
    'pell_solution',
    'psi_naive',
    'psi_prefix',
]
