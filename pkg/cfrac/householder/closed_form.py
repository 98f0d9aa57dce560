"""
Householder steps for f(x) = x^2 - N evaluated through signed Chebyshev values

At x = p/q with p^2 - N q^2 = (-1)^l the order-d step lands exactly on
T^l_{d+1}(p) / (q U^l_d(p)), the (d+1)l - 1 convergent.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from cfrac.chebyshev import eval_naive, signed_T, signed_U
from cfrac.chebyshev.families import T, U
from cfrac.errors import EvenOrderUnsupported, PellViolation
from cfrac.exact import GaussianRational, parity_sign
from cfrac.expansion import pell_check

from .config import HouseholderConfig

logger = logging.getLogger(__name__)


def ratio(num, den):
    """num/den as a Fraction, or a GaussianRational when either side is Gaussian"""
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return GaussianRational.coerce(num) / den


def _require_pell(p, q, cfg: HouseholderConfig):
    if not pell_check(p, q, cfg.N, cfg.l):
        raise PellViolation(
            f"p^2 - N q^2 = {p * p - cfg.N * q * q}, expected {parity_sign(cfg.l)}"
        )


def householder_cheb(p, q, cfg: HouseholderConfig):
    """
    (p', q') = (T^l_{d+1}(p), q U^l_d(p)), unreduced

    Raises:
        PellViolation: p^2 - N q^2 != (-1)^l
    """
    _require_pell(p, q, cfg)
    return signed_T(cfg.l, cfg.d + 1, p), q * signed_U(cfg.l, cfg.d, p)


def householder_X_form(p, q, cfg: HouseholderConfig):
    """
    x T_{(d+1)/2}(X) / ((X - 1) U_{(d-1)/2}(X)) with X = 1 - (-1)^l 2p^2

    Only odd orders have this form.

    Raises:
        EvenOrderUnsupported
        PellViolation
    """
    if cfg.d % 2 == 0:
        raise EvenOrderUnsupported(f"No X-form for even order d={cfg.d}")
    _require_pell(p, q, cfg)
    X = 1 - parity_sign(cfg.l) * 2 * p * p
    half = (cfg.d - 1) // 2
    num = p * eval_naive(T, half + 1, X)
    den = q * (X - 1) * eval_naive(U, half, X)
    return ratio(num, den)


def newton_compose(p, q, cfg: HouseholderConfig, times: int = 2):
    """
    Apply the Newton step `times` times; each step doubles the decimation
    index, so the second step works with period 2l

    Returns:
        (p_{2^times l - 1}, q_{2^times l - 1})
    """
    l = cfg.l
    for _ in range(times):
        step = HouseholderConfig(d=1, N=cfg.N, l=l)
        p, q = householder_cheb(p, q, step)
        l *= 2
    logger.debug("Newton x%d reached index %d", times, l - 1)
    return p, q
