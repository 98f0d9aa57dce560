"""
Periodic continued-fraction expansion of quadratic irrationals
Real (floor) and Hurwitz (nearest Gaussian integer) variants
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterator

from cfrac.errors import NoPeriodWithinBound, PerfectSquare, UnsupportedRadicand
from cfrac.exact import GaussianInt, GaussianRational, Mat2, QuadExtElem, gaussian_isqrt, isqrt, rational_sqrt
from utils.config import Config

from .hurwitz_round import round_gaussian_surd
from .surd import SurdState, floor_surd, normalize_real

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CFExpansion:
    """
    [c_0, ..., c_r, (c_{r+1}, ..., c_{r+l})repeated]

    head holds c_0..c_r, cycle holds c_{r+1}..c_{r+l}.
    """

    head: tuple
    cycle: tuple
    kind: str = "real"
    alpha: QuadExtElem | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.head or not self.cycle:
            raise ValueError("Expansion needs a non-empty head and cycle")

    @property
    def r(self) -> int:
        return len(self.head) - 1

    @property
    def l(self) -> int:
        return len(self.cycle)

    @property
    def radicand(self):
        return None if self.alpha is None else self.alpha.N

    @property
    def pell_radicand(self):
        """
        alpha^2 for alpha = v*sqrt(N), the D in p^2 - D q^2 = +-1

        Raises:
            UnsupportedRadicand: alpha has a rational part or alpha^2 is not integral
        """
        alpha = self.alpha
        if alpha is None or alpha.u != 0:
            raise UnsupportedRadicand(f"{alpha} is not a pure square root")
        square = alpha.v * alpha.v * alpha.N
        if isinstance(square, GaussianRational):
            if not square.is_integral():
                raise UnsupportedRadicand(f"alpha^2 = {square} is not a Gaussian integer")
            return square.num
        if square.denominator != 1:
            raise UnsupportedRadicand(f"alpha^2 = {square} is not an integer")
        return square.numerator

    def quotient(self, i: int):
        """c_i for any i >= 0"""
        if i < 0:
            raise IndexError(f"No partial quotient at index {i}")
        if i <= self.r:
            return self.head[i]
        return self.cycle[(i - self.r - 1) % self.l]

    def quotients(self, count: int) -> list:
        return [self.quotient(i) for i in range(count)]

    def as_dict(self) -> dict:
        return {
            "head": [str(c) for c in self.head],
            "cycle": [str(c) for c in self.cycle],
            "r": self.r,
            "l": self.l,
            "kind": self.kind,
        }


def _detect_period(
    start: Hashable,
    partial_quotient: Callable,
    advance: Callable,
    max_steps: int,
) -> tuple[list, int, int]:
    """
    Iterate states until the first exact repeat

    Returns:
        (quotients c_0..c_{j-1}, i, j) where state_i == state_j
    """
    seen = {}
    quotients = []
    state = start
    for j in range(max_steps + 1):
        if state in seen:
            return quotients, seen[state], j
        seen[state] = j
        c = partial_quotient(state)
        quotients.append(c)
        state = advance(state, c)
    raise NoPeriodWithinBound(f"No repeated complete quotient within {max_steps} steps")


def _split(quotients: list, i: int, j: int) -> tuple[tuple, tuple]:
    """Head/cycle split with r = max(i - 1, 0)"""
    if i == 0:
        # purely periodic: rotate so that c_0 sits in the head
        return (quotients[0],), tuple(quotients[1:j]) + (quotients[0],)
    return tuple(quotients[:i]), tuple(quotients[i:j])


def expand_surd(state: SurdState, max_steps: int | None = None) -> CFExpansion:
    """
    Real expansion from a SurdState; periodic by Lagrange, so the cap is
    only the O(sqrt(D) log D) bound on pre-period plus period
    """
    bound = 2 * (isqrt(state.D)[0] + 1) * (state.D.bit_length() + 1) + 64
    if max_steps:
        bound = max(bound, max_steps)
    quotients, i, j = _detect_period(state, floor_surd, lambda s, c: s.step(c), bound)
    head, cycle = _split(quotients, i, j)
    logger.debug("Real expansion: r=%d l=%d", len(head) - 1, len(cycle))
    return CFExpansion(head, cycle, "real", state.value())


def expand_real(a, b, c, N, max_steps: int | None = None) -> CFExpansion:
    """
    Expand (a + b*sqrt(N)) / c for rationals a, b, c and integer N > 1

    Raises:
        PerfectSquare: the value is rational
        UnsupportedRadicand: N <= 1 or N not an integer
    """
    expansion = expand_surd(normalize_real(a, b, c, N), max_steps)
    alpha = QuadExtElem(Fraction(a) / Fraction(c), Fraction(b) / Fraction(c), Fraction(N).numerator)
    return CFExpansion(expansion.head, expansion.cycle, "real", alpha)


def expand_quadratic(alpha: QuadExtElem, max_steps: int | None = None) -> CFExpansion:
    """Dispatch on the field of alpha: real expansion or Hurwitz expansion"""
    if alpha.is_gaussian:
        return expand_hurwitz(alpha, max_steps)
    return expand_real(alpha.u, alpha.v, 1, alpha.N, max_steps)


def _hurwitz_step(state: QuadExtElem, c: GaussianInt) -> QuadExtElem:
    return (state - c).inverse()


def expand_hurwitz(alpha, max_steps: int | None = None) -> CFExpansion:
    """
    Hurwitz expansion of a complex quadratic irrational

    Args:
        alpha: QuadExtElem over the Gaussian rationals, or a Gaussian
            integer N meaning sqrt(N)
        max_steps: iteration cap (default from config)

    Raises:
        PerfectSquare: alpha lies in Q(i)
        NoPeriodWithinBound: no exact repeat within the cap
    """
    if not isinstance(alpha, QuadExtElem):
        alpha = QuadExtElem.sqrt(GaussianInt.coerce(alpha))
    if not alpha.is_gaussian:
        alpha = QuadExtElem(
            GaussianRational.coerce(alpha.u),
            GaussianRational.coerce(alpha.v),
            GaussianInt.coerce(alpha.N),
        )
    if alpha.N == 0:
        raise UnsupportedRadicand("Radicand must be nonzero")
    if alpha.v == 0 or gaussian_isqrt(alpha.N) is not None:
        raise PerfectSquare(f"{alpha} lies in Q(i)")
    max_steps = max_steps or Config.get_max_steps()

    quotients, i, j = _detect_period(alpha, round_gaussian_surd, _hurwitz_step, max_steps)
    head, cycle = _split(quotients, i, j)
    logger.debug("Hurwitz expansion: r=%d l=%d", len(head) - 1, len(cycle))
    return CFExpansion(head, cycle, "hurwitz", alpha)


def check_galois_form(cf: CFExpansion) -> bool:
    """
    True for [c_0; (c_1, c_2, ..., c_2, c_1, 2*c_0) repeated]:
    r = 0, cycle ends in 2*c_0, the rest of the cycle is a palindrome
    """
    if cf.r != 0:
        return False
    body = cf.cycle[:-1]
    return cf.cycle[-1] == 2 * cf.head[0] and tuple(body) == tuple(reversed(body))


def _cycle_matrix(quotients) -> Mat2:
    m = Mat2.identity()
    for c in quotients:
        m = m @ Mat2.companion(c)
    return m


def reconstruct_real(cf: CFExpansion, N: int | None = None) -> QuadExtElem:
    """
    The quadratic irrational with this real expansion

    The purely periodic tail beta solves beta = (p*beta + p')/(q*beta + q')
    for the cycle matrix [[p, p'], [q, q']]; beta > 1 picks the + root.
    The result is written over sqrt(N) (default: the expansion's radicand)
    whenever the discriminant is a rational square multiple of N.
    """
    if cf.kind != "real":
        raise ValueError("Reconstruction is defined for real expansions")
    p, p_, q, q_ = _cycle_matrix(cf.cycle).entries()
    disc = (q_ - p) ** 2 + 4 * q * p_
    N = N if N is not None else cf.radicand
    scale = rational_sqrt(Fraction(disc, N)) if N else None
    if scale is None:
        beta = QuadExtElem(Fraction(p - q_, 2 * q), Fraction(1, 2 * q), disc)
    else:
        beta = QuadExtElem(Fraction(p - q_, 2 * q), scale / (2 * q), N)
    P, P_, Q, Q_ = _cycle_matrix(cf.head).entries()
    return (beta * P + P_) / (beta * Q + Q_)


def iter_quotients(cf: CFExpansion) -> Iterator:
    i = 0
    while True:
        yield cf.quotient(i)
        i += 1
