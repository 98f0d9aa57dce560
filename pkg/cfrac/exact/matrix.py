"""
2x2 matrices over int or Gaussian-integer scalars
"""

from __future__ import annotations

from dataclasses import dataclass

from cfrac.errors import NonUnimodular
from utils.op_counter import OpCounter

from .gaussian import GaussianInt


def _unit_inverse(u):
    """Inverse of a unit of Z or Z[i] (the conjugate, since |u| = 1)"""
    if isinstance(u, GaussianInt):
        if not u.is_unit():
            return None
        return u.conjugate()
    if u in (1, -1):
        return u
    return None


@dataclass(frozen=True, slots=True)
class Mat2:
    """[[a, b], [c, d]]"""

    a: object
    b: object
    c: object
    d: object

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def companion(cls, c) -> Mat2:
        """[[c, 1], [1, 0]], one partial-quotient step"""
        return cls(c, 1, 1, 0)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, t) -> Mat2:
        return Mat2(t * self.a, t * self.b, t * self.c, t * self.d)

    def adjugate(self) -> Mat2:
        return Mat2(self.d, -self.b, -self.c, self.a)


def mat_mul(A: Mat2, B: Mat2, counter: OpCounter | None = None) -> Mat2:
    if counter is not None:
        counter.matrix_mults += 1
    return A @ B


def mat_inv_unimodular(A: Mat2) -> Mat2:
    """
    Exact inverse of a matrix whose determinant is a unit (+-1, +-i)

    Raises:
        NonUnimodular: the determinant is not a unit of the scalar ring
    """
    inv_det = _unit_inverse(A.det)
    if inv_det is None:
        raise NonUnimodular(f"Determinant {A.det} of {A} is not a unit")
    return A.adjugate().scale(inv_det)


def lin_comb(t, A: Mat2, s, B: Mat2, counter: OpCounter | None = None) -> Mat2:
    """t*A + s*B"""
    if counter is not None:
        counter.lin_combs += 1
    return A.scale(t) + B.scale(s)


def mat_pow(A: Mat2, k: int, counter: OpCounter | None = None) -> Mat2:
    """A**k by binary powering, k >= 0"""
    if k < 0:
        raise ValueError("Negative matrix power")
    result = Mat2.identity()
    base = A
    started = False
    while k:
        if k & 1:
            result = mat_mul(result, base, counter) if started else base
            started = True
        k >>= 1
        if k:
            base = mat_mul(base, base, counter)
    return result
