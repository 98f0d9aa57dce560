"""
Gaussian integers and Gaussian rationals
Both are immutable and compare equal to the ordinary numbers they embed
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .integers import isqrt

_FULL_RE = re.compile(r"^(?P<re>[+-]?\d+)(?P<im>[+-]\d*)[ij]$")
_IMAG_RE = re.compile(r"^(?P<im>[+-]?\d*)[ij]$")
_REAL_RE = re.compile(r"^[+-]?\d+$")


def _im_coefficient(text: str) -> int:
    if text in ("", "+"):
        return 1
    if text == "-":
        return -1
    return int(text)


@dataclass(frozen=True, slots=True, eq=False)
class GaussianInt:
    """re + im*i with i*i = -1"""

    re: int
    im: int = 0

    @classmethod
    def coerce(cls, value) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"Cannot treat {value!r} as a Gaussian integer")

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        """Parse "a+bi", "a-bi", "bi", "i" or "a" (j accepted for i)"""
        s = text.replace(" ", "").replace("*", "")
        m = _FULL_RE.match(s)
        if m:
            return cls(int(m.group("re")), _im_coefficient(m.group("im")))
        m = _IMAG_RE.match(s)
        if m:
            return cls(0, _im_coefficient(m.group("im")))
        if _REAL_RE.match(s):
            return cls(int(s), 0)
        raise ValueError(f"Not a Gaussian integer: {text!r}")

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, (Fraction, GaussianRational)):
            return GaussianRational.coerce(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __pos__(self) -> GaussianInt:
        return self

    def __add__(self, other):
        if isinstance(other, (GaussianInt, int)):
            o = GaussianInt.coerce(other)
            return GaussianInt(self.re + o.re, self.im + o.im)
        if isinstance(other, (Fraction, GaussianRational)):
            return GaussianRational.coerce(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (GaussianInt, int)):
            o = GaussianInt.coerce(other)
            return GaussianInt(self.re - o.re, self.im - o.im)
        if isinstance(other, (Fraction, GaussianRational)):
            return GaussianRational.coerce(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            return GaussianInt(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (Fraction, GaussianRational)):
            return GaussianRational.coerce(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianInt, GaussianRational)):
            return GaussianRational.coerce(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianInt, GaussianRational)):
            return GaussianRational.coerce(other) / self
        return NotImplemented

    def __pow__(self, exponent: int) -> GaussianInt:
        if exponent < 0:
            raise ValueError("Negative powers leave the Gaussian integers")
        result = GaussianInt(1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divide_exact(self, other) -> GaussianInt:
        """Quotient in Z[i]; ValueError when the division leaves a remainder"""
        q = self / other
        if q.den != 1:
            raise ValueError(f"{self} is not divisible by {other}")
        return q.num


IOTA = GaussianInt(0, 1)


@dataclass(frozen=True, slots=True, eq=False)
class GaussianRational:
    """
    num / den with num in Z[i] and den a positive ordinary integer

    Canonical form: gcd(num.re, num.im, den) == 1 and den > 0, so equality
    is structural.
    """

    num: GaussianInt
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("GaussianRational with zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.re, num.im, den)
        if g > 1:
            num = GaussianInt(num.re // g, num.im // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_parts(cls, re, im=0) -> GaussianRational:
        re, im = Fraction(re), Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        return cls(
            GaussianInt(re.numerator * (den // re.denominator),
                        im.numerator * (den // im.denominator)),
            den,
        )

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, GaussianInt):
            return cls(value, 1)
        if isinstance(value, int):
            return cls(GaussianInt(value, 0), 1)
        if isinstance(value, Fraction):
            return cls(GaussianInt(value.numerator, 0), value.denominator)
        raise TypeError(f"Cannot treat {value!r} as a Gaussian rational")

    @property
    def real(self) -> Fraction:
        return Fraction(self.num.re, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.num.im, self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.num!r}, {self.den})"

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianInt, GaussianRational)):
            o = GaussianRational.coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self) -> int:
        if self.num.im == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.num, self.den)

    def __pos__(self) -> GaussianRational:
        return self

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("Division by zero Gaussian rational")
        # multiply through by the conjugate so the denominator is real
        return GaussianRational(
            self.num * o.num.conjugate() * o.den,
            self.den * o.num.norm(),
        )

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> GaussianRational:
        if exponent < 0:
            return GaussianRational(GaussianInt(1, 0)) / (self ** -exponent)
        return GaussianRational(self.num ** exponent, self.den ** exponent)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.num.conjugate(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)


def _round_half_up(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


def gauss_round(z) -> GaussianInt:
    """
    Nearest Gaussian integer, ties rounded up (toward +inf) per component

    Exact rational comparison, never floating point.
    """
    z = GaussianRational.coerce(z)
    return GaussianInt(_round_half_up(z.real), _round_half_up(z.imag))


def gaussian_isqrt(n) -> GaussianInt | None:
    """Exact square root in Z[i] with non-negative real part, or None"""
    n = GaussianInt.coerce(n)
    r, exact = isqrt(n.norm())
    if not exact:
        return None
    a2, rem_a = divmod(r + n.re, 2)
    b2, rem_b = divmod(r - n.re, 2)
    if rem_a or rem_b:
        return None
    a, a_exact = isqrt(a2)
    b, b_exact = isqrt(b2)
    if not (a_exact and b_exact):
        return None
    if n.im < 0:
        b = -b
    root = GaussianInt(a, b)
    if root * root != n:
        return None
    if a == 0 and b < 0:
        root = -root
    return root
