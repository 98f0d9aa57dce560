"""
Closed-form decimation for square roots in Galois form

p_{kl-1} = T^l_k(p_{l-1}),  q_{kl-1} = q_{l-1} U^l_{k-1}(p_{l-1})
"""

from __future__ import annotations

from cfrac.chebyshev import eval_halve_square, eval_matrix_power
from cfrac.errors import MethodIndexMismatch, NotGaloisForm, TraceMismatch
from cfrac.expansion import CFExpansion, ConvergentMatrix, check_galois_form, psi_prefix
from utils.op_counter import OpCounter

from .traces import t1_from_psi

EVALUATORS = ("matrix", "halve")


def decimation_multiplier(cf: CFExpansion, m: int) -> int:
    """
    k with m = k*l - 1

    Raises:
        MethodIndexMismatch: m + 1 is not a positive multiple of l
    """
    if m + 1 < cf.l or (m + 1) % cf.l:
        raise MethodIndexMismatch(f"m={m} is not of the form k*{cf.l} - 1")
    return (m + 1) // cf.l


def period_end(cf: CFExpansion, counter: OpCounter | None = None) -> ConvergentMatrix:
    """
    Psi_{l-1} of a Galois-form expansion, after checking the two facts the
    closed form rests on: t_1 = 2 p_{l-1} and q_{l-2} = p_{l-1} - c_0 q_{l-1}

    Raises:
        NotGaloisForm
        TraceMismatch
    """
    if not check_galois_form(cf):
        raise NotGaloisForm(f"Expansion {cf.as_dict()} is not of the form [c0; (c1 .. c1, 2c0)]")
    prefix = psi_prefix(cf, cf.l, counter)
    psi_end, psi_l = prefix[cf.l], prefix[cf.l + 1]
    t1 = t1_from_psi(prefix[1], psi_l, cf.l)
    if t1 != 2 * psi_end.p:
        raise TraceMismatch(f"t_1 = {t1} but 2 p_(l-1) = {2 * psi_end.p}")
    if psi_end.q_prev != psi_end.p - cf.head[0] * psi_end.q:
        raise TraceMismatch("q_(l-2) != p_(l-1) - c_0 q_(l-1)")
    return psi_end


def decimation_closed_form(cf: CFExpansion, k: int, evaluator: str = "matrix",
                           counter: OpCounter | None = None,
                           psi_end: ConvergentMatrix | None = None):
    """
    (p_{kl-1}, q_{kl-1}) in O(log k) matrix operations

    Args:
        cf: expansion in Galois form
        k: decimation multiplier, k >= 1
        evaluator: "matrix" (companion powering) or "halve" (halve-and-square)
        counter: optional operation counter
        psi_end: precomputed Psi_{l-1}

    Raises:
        NotGaloisForm
    """
    if k < 1:
        raise ValueError(f"Multiplier must be >= 1, got {k}")
    if evaluator not in EVALUATORS:
        raise ValueError(f"Unknown evaluator {evaluator!r}, expected one of {EVALUATORS}")
    if psi_end is None:
        psi_end = period_end(cf, counter)
    x, l = psi_end.p, cf.l

    if evaluator == "matrix":
        T_k, _, U_prev = eval_matrix_power(l, k, x, counter)
    else:
        state = eval_halve_square(l, k, x, counter)
        T_k, U_prev = state.T, state.U_prev
    return T_k, psi_end.q * U_prev
