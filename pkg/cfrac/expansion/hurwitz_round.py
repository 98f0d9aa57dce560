"""
Exact nearest-Gaussian-integer rounding of u + v*sqrt(N)

sqrt(N) is the principal branch (re > 0, or re == 0 and im >= 0). Writing
w = v*sqrt(N) = x + iy, every comparison of x or y against a rational is
decided by sign tests on u, v and N alone, through squares. A
high-precision mpmath evaluation only proposes the candidate integer.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

import mpmath

from cfrac.exact import GaussianInt, GaussianRational, QuadExtElem, sign, sign_of_surd

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)


class _RootGeometry:
    """Exact facts about w = v*sqrt(N) for one (v, N) pair"""

    def __init__(self, v: GaussianRational, N: GaussianInt):
        self.v = v
        self.N = N
        self.norm_sq = N.re * N.re + N.im * N.im
        if N.im:
            self.sign_b = sign(N.im)
        else:
            self.sign_b = 1 if N.re < 0 else 0
        self.a_pos = not (N.im == 0 and N.re <= 0)
        self.b_pos = not (N.im == 0 and N.re >= 0)
        w2 = v * v * N
        self.A = w2.real
        self.B = w2.imag
        self.w2_norm = self.A * self.A + self.B * self.B

    def _sign_combination(self, P: Fraction, Q: Fraction) -> int:
        """Exact sign of P*a + Q*|b| where sqrt(N) = a + b*i"""
        s1 = sign(P) if self.a_pos else 0
        s2 = sign(Q) if self.b_pos else 0
        if s1 >= 0 and s2 >= 0:
            return max(s1, s2)
        if s1 <= 0 and s2 <= 0:
            return min(s1, s2)
        # a^2 = (R + re N)/2, |b|^2 = (R - re N)/2 with R = |N|
        diff = sign_of_surd((P * P + Q * Q) * self.N.re, P * P - Q * Q, Fraction(self.norm_sq))
        if diff > 0:
            return s1
        if diff < 0:
            return s2
        return 0

    def sign_x(self) -> int:
        p, q = self.v.real, self.v.imag
        return self._sign_combination(p, -q * self.sign_b)

    def sign_y(self) -> int:
        p, q = self.v.real, self.v.imag
        return self._sign_combination(q, p * self.sign_b)

    def compare_x(self, c: Fraction) -> int:
        """sign(x - c)"""
        # x^2 = (A + |w^2|)/2
        return self._compare(self.sign_x(), c, self.A - 2 * c * c)

    def compare_y(self, c: Fraction) -> int:
        """sign(y - c)"""
        # y^2 = (|w^2| - A)/2
        return self._compare(self.sign_y(), c, -self.A - 2 * c * c)

    def _compare(self, s: int, c: Fraction, r0: Fraction) -> int:
        sc = sign(c)
        if sc == 0:
            return s
        if s != sc:
            return s if s != 0 else -sc
        d = sign_of_surd(r0, Fraction(1), self.w2_norm)
        return d if s > 0 else -d


def _estimate(u: GaussianRational, v: GaussianRational, N: GaussianInt) -> tuple[int, int]:
    """Candidate rounding from a floating evaluation at adequate precision"""
    bits = max(
        abs(u.num.re).bit_length(), abs(u.num.im).bit_length(), u.den.bit_length(),
        abs(v.num.re).bit_length(), abs(v.num.im).bit_length(), v.den.bit_length(),
        abs(N.re).bit_length(), abs(N.im).bit_length(),
    )
    with mpmath.workprec(2 * bits + 64):
        root = mpmath.sqrt(mpmath.mpc(N.re, N.im))
        vr = mpmath.mpf(v.num.re) / v.den
        vi = mpmath.mpf(v.num.im) / v.den
        x = vr * root.real - vi * root.imag
        y = vr * root.imag + vi * root.real
        re = mpmath.mpf(u.num.re) / u.den + x + mpmath.mpf(0.5)
        im = mpmath.mpf(u.num.im) / u.den + y + mpmath.mpf(0.5)
        return int(mpmath.floor(re)), int(mpmath.floor(im))


def _settle(k: int, offset: Fraction, compare) -> int:
    """
    Move k until k - 1/2 <= offset + t < k + 1/2, with compare(c) = sign(t - c)
    """
    steps = 0
    while compare(k - _HALF - offset) < 0:
        k -= 1
        steps += 1
    while compare(k + _HALF - offset) >= 0:
        k += 1
        steps += 1
    if steps:
        logger.debug("Rounding estimate corrected by %d step(s)", steps)
    return k


def round_gaussian_surd(elem: QuadExtElem) -> GaussianInt:
    """
    Nearest Gaussian integer to u + v*sqrt(N), ties rounded toward +inf
    in each component
    """
    if not elem.is_gaussian:
        return GaussianInt(round_real_surd(elem), 0)
    u, v, N = elem.u, elem.v, elem.N
    if v == 0:
        re = math.floor(u.real + _HALF)
        im = math.floor(u.imag + _HALF)
        return GaussianInt(re, im)
    geometry = _RootGeometry(v, N)
    k_re, k_im = _estimate(u, v, N)
    k_re = _settle(k_re, u.real, geometry.compare_x)
    k_im = _settle(k_im, u.imag, geometry.compare_y)
    return GaussianInt(k_re, k_im)


def round_real_surd(elem: QuadExtElem) -> int:
    """floor(u + v*sqrt(N) + 1/2) for a real quadratic element"""
    u, v, N = elem.u, elem.v, Fraction(elem.N)
    if N < 0:
        raise ValueError("Real rounding needs a non-negative radicand")

    def compare(c):
        return sign_of_surd(-c, v, N)

    with mpmath.workprec(256):
        estimate = int(mpmath.floor(mpmath.mpf(u.numerator) / u.denominator
                                    + mpmath.mpf(v.numerator) / v.denominator * mpmath.sqrt(N.numerator)
                                    + mpmath.mpf(0.5)))
    return _settle(estimate, u, compare)
