"""
Index decompositions for the fast convergent algorithms

Binary:  m = m0 + l(2^{n_1} + ... + 2^{n_q}),  n_1 < ... < n_q
Nested:  m = m0 + 2^{m_1} l (1 + 2^{m_2}(1 + ... (1 + 2^{m_q})))
with m0 = r + ((m - r) mod l) in both, and n_i = m_1 + ... + m_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from cfrac.errors import MTooSmall

from .traces import validate_nested


def _base(m: int, r: int, l: int) -> tuple[int, int]:
    if l < 1 or r < 0:
        raise ValueError(f"Need r >= 0 and l >= 1, got r={r} l={l}")
    if m < r + l:
        raise MTooSmall(f"m={m} is below r+l={r + l}")
    m0 = r + (m - r) % l
    return m0, (m - m0) // l


@dataclass(frozen=True)
class BinaryDecomposition:
    m: int
    r: int
    l: int
    m0: int
    exponents: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.exponents)

    @property
    def checkpoints(self) -> tuple[int, ...]:
        """h_1, ..., h_q"""
        out, h = [], self.m0
        for n in self.exponents:
            h += self.l << n
            out.append(h)
        return tuple(out)

    @property
    def lin_comb_count(self) -> int:
        return sum(self.exponents)

    @property
    def expected_mults(self) -> int:
        return self.q if self.m0 == self.r else self.q + 2

    def recompose(self) -> int:
        return self.m0 + self.l * sum(1 << n for n in self.exponents)

    def as_dict(self) -> dict:
        return {"m0": self.m0, "n": list(self.exponents), "q": self.q}


@dataclass(frozen=True)
class NestedDecomposition:
    m: int
    r: int
    l: int
    m0: int
    exponents: tuple[int, ...]
    multipliers: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.exponents)

    @property
    def lin_comb_count(self) -> int:
        return sum(self.exponents)

    @property
    def binary_lin_comb_count(self) -> int:
        """sum of n_i = sum of (q + 1 - i) m_i"""
        q = self.q
        return sum((q - i) * m for i, m in enumerate(self.exponents))

    @property
    def expected_mults(self) -> int:
        return self.q if self.m0 == self.r else self.q + 2

    def recompose(self) -> int:
        acc = 1
        for m in reversed(self.exponents[1:]):
            acc = 1 + (acc << m)
        return self.m0 + ((self.l * acc) << self.exponents[0])

    def as_dict(self) -> dict:
        return {
            "m0": self.m0,
            "m": list(self.exponents),
            "k": list(self.multipliers),
            "q": self.q,
        }


def decompose_binary(m: int, r: int, l: int) -> BinaryDecomposition:
    """
    Raises:
        MTooSmall: m < r + l
    """
    m0, n = _base(m, r, l)
    exponents = tuple(i for i in range(n.bit_length()) if (n >> i) & 1)
    return BinaryDecomposition(m, r, l, m0, exponents)


def decompose_nested(m: int, r: int, l: int) -> NestedDecomposition:
    """
    Raises:
        MTooSmall: m < r + l
    """
    binary = decompose_binary(m, r, l)
    ns = binary.exponents
    ms = (ns[0],) + tuple(b - a for a, b in zip(ns, ns[1:]))
    q = len(ms)
    ks = [1]
    for j in range(1, q):
        ks.append(1 + (ks[-1] << ms[q - j]))
    validate_nested(ms, ks)
    return NestedDecomposition(m, r, l, binary.m0, ms, tuple(ks))
