"""
Fast convergents

- traces.py: t_1, doubling formulas, TraceTable and the level-by-level trace schedule
- decomposition.py: binary and nested decompositions of the index
- algorithms.py: binary and nested convergent algorithms
- decimation.py: closed-form decimation for Galois-form square roots
- session.py: per-expansion caches and method dispatch
"""

from .traces import (
    TraceTable,
    alg3_traces,
    needed_traces,
    t1_from_psi,
    t_double,
    t_pair_step,
    validate_nested,
)
from .decomposition import (
    BinaryDecomposition,
    NestedDecomposition,
    decompose_binary,
    decompose_nested,
)
from .algorithms import Precalc, psi_binary, psi_nested
from .decimation import EVALUATORS, decimation_closed_form, decimation_multiplier, period_end
from .session import MATRIX_METHODS, METHODS, ConvergentSession

__all__ = [
    'TraceTable',
    'alg3_traces',
    'needed_traces',
    't1_from_psi',
    't_double',
    't_pair_step',
    'validate_nested',
    'BinaryDecomposition',
    'NestedDecomposition',
    'decompose_binary',
    'decompose_nested',
    'Precalc',
    'psi_binary',
    'psi_nested',
    'EVALUATORS',
    'decimation_closed_form',
    'decimation_multiplier',
    'period_end',
    'MATRIX_METHODS',
    'METHODS',
    'ConvergentSession',
]
