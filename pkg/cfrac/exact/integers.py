"""
Integer helpers shared by every module
Python ints are already unbounded, so BigInt is plain `int`
"""

import math
import sys
from fractions import Fraction

from cfrac.errors import NegativeRadicand

# Convergents run to tens of thousands of digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def isqrt(n: int) -> tuple[int, bool]:
    """
    Floor square root with an exactness flag

    Returns:
        (s, exact) with s = floor(sqrt(n)) and exact = (s*s == n)
    """
    if n < 0:
        raise NegativeRadicand(f"Cannot take the square root of {n}")
    s = math.isqrt(n)
    return s, s * s == n


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational"""
    if x < 0:
        return None
    num, num_exact = isqrt(x.numerator)
    den, den_exact = isqrt(x.denominator)
    if num_exact and den_exact:
        return Fraction(num, den)
    return None


def sign(x) -> int:
    return (x > 0) - (x < 0)


def parity_sign(e: int) -> int:
    """(-1)**e from the parity of e, without pow"""
    return -1 if e & 1 else 1


def sign_of_surd(r0: Fraction, r1: Fraction, d: Fraction) -> int:
    """
    Exact sign of r0 + r1*sqrt(d) for rationals r0, r1 and d >= 0

    Compares squares instead of evaluating the root.
    """
    s0, s1 = sign(r0), sign(r1)
    if s1 == 0 or d == 0:
        return s0
    if s0 == 0:
        return s1
    if s0 == s1:
        return s0
    lhs = r0 * r0
    rhs = r1 * r1 * d
    if lhs > rhs:
        return s0
    if lhs < rhs:
        return s1
    return 0
