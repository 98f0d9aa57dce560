"""
Convergent matrices Psi_n = [[p_n, p_{n-1}], [q_n, q_{n-1}]] by direct iteration
This is the ground-truth oracle every fast method is checked against
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from cfrac.errors import NonUnimodular
from cfrac.exact import Mat2, mat_inv_unimodular, parity_sign
from utils.op_counter import OpCounter

from .expansion import CFExpansion, expand_real


@dataclass(frozen=True, slots=True)
class ConvergentMatrix:
    index: int
    matrix: Mat2

    @property
    def p(self):
        return self.matrix.a

    @property
    def q(self):
        return self.matrix.c

    @property
    def p_prev(self):
        return self.matrix.b

    @property
    def q_prev(self):
        return self.matrix.d

    @property
    def det(self):
        return self.matrix.det

    def expected_det(self) -> int:
        """(-1)^(n+1), from the product of determinant -1 steps"""
        return parity_sign(self.index + 1)

    def inverse(self) -> Mat2:
        """
        Psi_n^-1; real and Hurwitz expansions alike must have det = (-1)^(n+1)

        Raises:
            NonUnimodular: the determinant is anything else, a Gaussian unit +-i included
        """
        if self.det != self.expected_det():
            raise NonUnimodular(f"Psi_{self.index} has determinant {self.det}, expected {self.expected_det()}")
        return mat_inv_unimodular(self.matrix)

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "p": str(self.p),
            "q": str(self.q),
            "p_prev": str(self.p_prev),
            "q_prev": str(self.q_prev),
        }


def iter_psi(cf: CFExpansion, counter: OpCounter | None = None) -> Iterator[ConvergentMatrix]:
    """Yield Psi_{-1}, Psi_0, Psi_1, ... forever"""
    m = Mat2.identity()
    yield ConvergentMatrix(-1, m)
    n = 0
    while True:
        m = m @ Mat2.companion(cf.quotient(n))
        if counter is not None:
            counter.precalc_steps += 1
        yield ConvergentMatrix(n, m)
        n += 1


def psi_naive(cf: CFExpansion, n: int, counter: OpCounter | None = None) -> ConvergentMatrix:
    """Left-to-right product of [[c_i, 1], [1, 0]] for i = 0..n"""
    if n < -1:
        raise ValueError(f"Convergent index must be >= -1, got {n}")
    for psi in iter_psi(cf, counter):
        if psi.index == n:
            return psi
    raise AssertionError("unreachable")


def psi_prefix(cf: CFExpansion, n: int, counter: OpCounter | None = None) -> list[ConvergentMatrix]:
    """[Psi_{-1}, Psi_0, ..., Psi_n]"""
    prefix = []
    for psi in iter_psi(cf, counter):
        prefix.append(psi)
        if psi.index == n:
            return prefix
    raise AssertionError("unreachable")


def pell_check(p, q, N, l: int) -> bool:
    """p^2 - N q^2 == (-1)^l, exactly"""
    return p * p - N * q * q == parity_sign(l)


def pell_solution(N: int) -> tuple[int, int, int]:
    """
    (p_{l-1}, q_{l-1}, l) for sqrt(N): the fundamental solution of
    x^2 - N y^2 = (-1)^l

    Raises:
        PerfectSquare
        UnsupportedRadicand
    """
    cf = expand_real(0, 1, 1, N)
    psi = psi_naive(cf, cf.l - 1)
    return psi.p, psi.q, cf.l


def pell_positive(N: int) -> tuple[int, int]:
    """Fundamental solution of x^2 - N y^2 = +1"""
    p, q, l = pell_solution(N)
    if l % 2 == 0:
        return p, q
    # (p + q sqrt N)^2
    return p * p + N * q * q, 2 * p * q
