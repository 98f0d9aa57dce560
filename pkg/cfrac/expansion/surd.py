"""
Integer surd states (P + sqrt(D)) / Q for real expansions
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cfrac.errors import PerfectSquare, UnsupportedRadicand
from cfrac.exact import QuadExtElem, isqrt


@dataclass(frozen=True, slots=True)
class SurdState:
    """
    (P + sqrt(D)) / Q

    Invariants: Q != 0, Q divides D - P^2, D >= 0 not a perfect square.
    D is fixed along an expansion, so (P, Q) alone identify the value.
    """

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("SurdState with Q = 0")
        if (self.D - self.P * self.P) % self.Q:
            raise ValueError(f"Q={self.Q} does not divide D - P^2 for {self}")

    def value(self) -> QuadExtElem:
        return QuadExtElem(Fraction(self.P, self.Q), Fraction(1, self.Q), self.D)

    def step(self, c: int) -> SurdState:
        """Complete quotient after removing partial quotient c: 1/(state - c)"""
        P = c * self.Q - self.P
        Q = (self.D - P * P) // self.Q
        return SurdState(P, Q, self.D)


def floor_surd(state: SurdState) -> int:
    """
    floor((P + sqrt(D)) / Q) using isqrt only

    sqrt(D) is irrational, so the quotient is never an integer and the
    negative-Q case is ceil-based.
    """
    s, _ = isqrt(state.D)
    if state.Q > 0:
        return (state.P + s) // state.Q
    return -((state.P + s) // -state.Q) - 1


def normalize_real(a, b, c, N) -> SurdState:
    """
    Bring (a + b*sqrt(N)) / c with rational a, b, c into SurdState form

    Raises:
        UnsupportedRadicand: N is not an integer > 1
        PerfectSquare: the value is rational
    """
    N = Fraction(N)
    if N.denominator != 1 or N <= 1:
        raise UnsupportedRadicand(f"Radicand must be an integer > 1, got {N}")
    N = N.numerator
    if isqrt(N)[1]:
        raise PerfectSquare(f"sqrt({N}) is an integer")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c == 0:
        raise ValueError("Denominator c must be nonzero")
    if b == 0:
        raise PerfectSquare("Coefficient of sqrt(N) is zero, value is rational")

    x, y = a / c, b / c
    P = x.numerator * y.denominator
    Q = x.denominator * y.denominator
    D = (y.numerator * x.denominator) ** 2 * N
    if y < 0:
        P, Q = -P, -Q
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    return SurdState(P, Q, D)
