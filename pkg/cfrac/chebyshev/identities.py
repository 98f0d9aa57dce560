"""
Identity checks for the recurrence families

Each check evaluates both sides exactly at a point and returns equality.
run_identity_suite drives every tag over random integer points.
"""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from cfrac.errors import UnknownIdentity
from cfrac.exact import IOTA, Mat2, mat_pow, parity_sign

from .evaluation import (
    eval_halve_square,
    eval_matrix_power,
    eval_naive,
    signed_T,
    signed_U,
)
from .families import T, TBAR, TD, TDBAR, U, UBAR, UD, UDBAR, V, W

logger = logging.getLogger(__name__)


def _nesting_T(x, k, m):
    return eval_naive(T, k * m, x) == eval_naive(T, k, eval_naive(T, m, x))


def _nesting_U(x, k, m):
    if k < 1 or m < 1:
        return True
    lhs = eval_naive(U, k * m - 1, x)
    rhs = eval_naive(U, k - 1, eval_naive(T, m, x)) * eval_naive(U, m - 1, x)
    return lhs == rhs


def _pell_TU(x, k, _extra):
    if k < 1:
        return eval_naive(T, 0, x) == 1
    return eval_naive(T, k, x) ** 2 - (x * x - 1) * eval_naive(U, k - 1, x) ** 2 == 1


def _prop3_1(x, k, _extra):
    """T_k(-T_2) = (-1)^k T_{2k} and 2x U_k(-T_2) = (-1)^k U_{2k+1}"""
    y = -eval_naive(T, 2, x)
    s = parity_sign(k)
    return (
        eval_naive(T, k, y) == s * eval_naive(T, 2 * k, x)
        and 2 * x * eval_naive(U, k, y) == s * eval_naive(U, 2 * k + 1, x)
    )


def _prop3_2(x, k, _extra):
    """T_k(TBAR_2) = TBAR_{2k} and 2x U_k(TBAR_2) = UBAR_{2k+1}"""
    y = eval_naive(TBAR, 2, x)
    return (
        eval_naive(T, k, y) == eval_naive(TBAR, 2 * k, x)
        and 2 * x * eval_naive(U, k, y) == eval_naive(UBAR, 2 * k + 1, x)
    )


def _prop3_3(x, k, _extra):
    """V_k(-T_2) = (-1)^k U_{2k} and x W_k(-T_2) = (-1)^k T_{2k+1}"""
    y = -eval_naive(T, 2, x)
    s = parity_sign(k)
    return (
        eval_naive(V, k, y) == s * eval_naive(U, 2 * k, x)
        and x * eval_naive(W, k, y) == s * eval_naive(T, 2 * k + 1, x)
    )


def _prop3_4(x, k, _extra):
    """V_k(TBAR_2) = UBAR_{2k} and x W_k(TBAR_2) = TBAR_{2k+1}"""
    y = eval_naive(TBAR, 2, x)
    return (
        eval_naive(V, k, y) == eval_naive(UBAR, 2 * k, x)
        and x * eval_naive(W, k, y) == eval_naive(TBAR, 2 * k + 1, x)
    )


def _mgr(x, k, l):
    """T_l W_k(-T_{2l}) = (-1)^k T_{(2k+1)l}"""
    lhs = eval_naive(T, l, x) * eval_naive(W, k, -eval_naive(T, 2 * l, x))
    return lhs == parity_sign(k) * eval_naive(T, (2 * k + 1) * l, x)


def _scaling_dilated(x, k, _extra):
    """TD_k(2x) = 2 T_k(x) and UD_k(2x) = U_k(x)"""
    return (
        eval_naive(TD, k, 2 * x) == 2 * eval_naive(T, k, x)
        and eval_naive(UD, k, 2 * x) == eval_naive(U, k, x)
    )


def _scaling_signchanged(x, k, _extra):
    """i^k F_k(-i x) = FBAR_k(x), in exact Gaussian arithmetic"""
    unit = IOTA ** k
    y = -IOTA * x
    pairs = ((T, TBAR), (U, UBAR), (TD, TDBAR), (UD, UDBAR))
    return all(unit * eval_naive(f, k, y) == eval_naive(fbar, k, x) for f, fbar in pairs)


def random_unimodular(x, seed: int, det: int) -> Mat2:
    """
    [[1, x], [0, 1]] times a seeded product of random shears, then a swap
    when det = -1; any integer matrix of determinant +-1 is such a product
    """
    rng = np.random.default_rng(seed)
    M = Mat2(1, x, 0, 1)
    for _ in range(int(rng.integers(1, 5))):
        a, b = (int(v) for v in rng.integers(-9, 10, size=2))
        M = M @ Mat2(1, a, 0, 1) @ Mat2(1, 0, b, 1)
    if det == -1:
        M = M @ Mat2(0, 1, 1, 0)
    return M


def _trace_prop1(x, k, seed):
    M = random_unimodular(x, seed, 1)
    return mat_pow(M, k).trace == eval_naive(TD, k, M.trace)


def _trace_prop2(x, k, seed):
    M = random_unimodular(x, seed, -1)
    return mat_pow(M, k).trace == eval_naive(TDBAR, k, M.trace)


def _methods_agree(x, k, l):
    naive = (signed_T(l, k, x), signed_U(l, k, x), signed_U(l, k - 1, x))
    state = eval_halve_square(l, k, x)
    return eval_matrix_power(l, k, x) == naive and (state.T, state.U, state.U_prev) == naive


def _factored_T6(x, _k, _extra):
    return signed_T(0, 6, x) == (2 * x * x - 1) * (16 * x**4 - 16 * x * x + 1)


def _factored_U5(x, _k, _extra):
    return signed_U(0, 5, x) == 2 * x * (2 * x + 1) * (2 * x - 1) * (4 * x * x - 3)


# tag -> (check, k range, extra range)
_CHECKS: dict[str, tuple[Callable, tuple[int, int], tuple[int, int]]] = {
    "nesting-T": (_nesting_T, (0, 8), (1, 8)),
    "nesting-U": (_nesting_U, (1, 8), (1, 8)),
    "pell-TU": (_pell_TU, (1, 32), (0, 0)),
    "prop3-1": (_prop3_1, (0, 8), (0, 0)),
    "prop3-2": (_prop3_2, (0, 8), (0, 0)),
    "prop3-3": (_prop3_3, (0, 8), (0, 0)),
    "prop3-4": (_prop3_4, (0, 8), (0, 0)),
    "mgr": (_mgr, (0, 8), (1, 4)),
    "scaling-dilated": (_scaling_dilated, (0, 32), (0, 0)),
    "scaling-signchanged": (_scaling_signchanged, (0, 32), (0, 0)),
    "trace-prop1": (_trace_prop1, (0, 32), (0, 2**31)),
    "trace-prop2": (_trace_prop2, (0, 32), (0, 2**31)),
    "methods-agree": (_methods_agree, (0, 64), (0, 4)),
    "factored-T6": (_factored_T6, (6, 6), (0, 0)),
    "factored-U5": (_factored_U5, (5, 5), (0, 0)),
}

IDENTITY_TAGS = tuple(_CHECKS)


def check_identity(tag: str, x, k: int, extra: int = 1) -> bool:
    """
    Evaluate one identity at (x, k, extra)

    extra is m for the nesting identities, l for mgr / methods-agree and
    the seed of the random unimodular test matrix for trace-prop1/2.

    Raises:
        UnknownIdentity: tag is not registered
    """
    try:
        check = _CHECKS[tag][0]
    except KeyError:
        raise UnknownIdentity(f"Unknown identity {tag!r}") from None
    return bool(check(x, k, extra))


def _draw(rng, bounds: tuple[int, int], cap: int | None = None) -> int:
    lo, hi = bounds
    if cap is not None:
        hi = max(lo, min(hi, cap))
    return int(rng.integers(lo, hi + 1))


def run_identity_suite(trials: int, seed: int = 0, max_k: int = 32, tags=None) -> dict:
    """
    Check every tag at `trials` random integer points in [-50, 50]

    Returns:
        dict: tag -> {"passed", "failed", "first_failure"}
    """
    rng = np.random.default_rng(seed)
    results = {}
    for tag in tags or IDENTITY_TAGS:
        if tag not in _CHECKS:
            raise UnknownIdentity(f"Unknown identity {tag!r}")
        check, k_bounds, extra_bounds = _CHECKS[tag]
        passed, failed, first = 0, 0, None
        for _ in range(trials):
            x = int(rng.integers(-50, 51))
            k = _draw(rng, k_bounds, max_k)
            extra = _draw(rng, extra_bounds)
            if check(x, k, extra):
                passed += 1
            else:
                failed += 1
                if first is None:
                    first = {"x": x, "k": k, "extra": extra}
                    logger.warning("Identity %s failed at x=%d k=%d extra=%d", tag, x, k, extra)
        results[tag] = {"passed": passed, "failed": failed, "first_failure": first}
    return results


