"""
Elements u + v*sqrt(N) of a quadratic extension

Coefficients are Fractions when N is an ordinary integer and Gaussian
rationals when N is a Gaussian integer. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gaussian import GaussianInt, GaussianRational


def _coerce_coefficient(value, gaussian: bool):
    if gaussian:
        return GaussianRational.coerce(value)
    if isinstance(value, (GaussianInt, GaussianRational)):
        raise TypeError("Gaussian coefficient in a real quadratic field")
    return Fraction(value)


@dataclass(frozen=True, slots=True, eq=False)
class QuadExtElem:
    u: Fraction | GaussianRational
    v: Fraction | GaussianRational
    N: int | GaussianInt

    def __post_init__(self):
        gaussian = isinstance(self.N, GaussianInt)
        object.__setattr__(self, "u", _coerce_coefficient(self.u, gaussian))
        object.__setattr__(self, "v", _coerce_coefficient(self.v, gaussian))

    @classmethod
    def sqrt(cls, N) -> QuadExtElem:
        return cls(0, 1, N)

    @property
    def is_gaussian(self) -> bool:
        return isinstance(self.N, GaussianInt)

    def _lift(self, other) -> QuadExtElem:
        if isinstance(other, QuadExtElem):
            if other.N != self.N:
                raise ValueError(f"Different radicands: {self.N} and {other.N}")
            return other
        return QuadExtElem(other, 0, self.N)

    def __str__(self) -> str:
        return f"{self.u} + {self.v}*sqrt({self.N})"

    def __repr__(self) -> str:
        return f"QuadExtElem({self.u!r}, {self.v!r}, {self.N!r})"

    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self) -> int:
        return hash((self.u, self.v, self.N))

    def __neg__(self) -> QuadExtElem:
        return QuadExtElem(-self.u, -self.v, self.N)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadExtElem(self.u + o.u, self.v + o.v, self.N)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadExtElem(self.u - o.u, self.v - o.v, self.N)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadExtElem(
            self.u * o.u + self.v * o.v * self.N,
            self.u * o.v + self.v * o.u,
            self.N,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, exponent: int) -> QuadExtElem:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = QuadExtElem(1, 0, self.N)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> QuadExtElem:
        return QuadExtElem(self.u, -self.v, self.N)

    def norm(self):
        """u^2 - v^2 N, the product with the conjugate"""
        return self.u * self.u - self.v * self.v * self.N

    def inverse(self) -> QuadExtElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        return QuadExtElem(self.u / n, -self.v / n, self.N)

    def is_rational(self) -> bool:
        return self.v == 0
