"""
Trace tables t_k = Tr((Psi_n^-1 Psi_{n+l})^k), independent of n >= r

t_0 = 2, t_{k+2} = t_1 t_{k+1} - (-1)^l t_k, so t_k is the signed dilated
first-kind family evaluated at t_1.
"""

from __future__ import annotations

import logging

from cfrac.chebyshev import signed_dilated_T
from cfrac.errors import InvalidDecomposition, MismatchedIndices, TraceMismatch
from cfrac.exact import Mat2, mat_inv_unimodular, parity_sign
from cfrac.expansion import ConvergentMatrix
from utils.op_counter import OpCounter

logger = logging.getLogger(__name__)


def _as_matrix(psi) -> Mat2:
    return psi.matrix if isinstance(psi, ConvergentMatrix) else psi


def t1_from_psi(psi_r, psi_rl, l: int | None = None):
    """
    t_1 from Psi_r and Psi_{r+l}, computed twice

    Once as Tr(Psi_r^-1 Psi_{r+l}), once from the determinant-difference
    formula with sign (-1)^r. The two must agree.

    Raises:
        MismatchedIndices: the index gap is not l
        NonUnimodular: det Psi_r is not (-1)^(r+1)
        TraceMismatch: the two computations disagree
    """
    if isinstance(psi_r, ConvergentMatrix) and isinstance(psi_rl, ConvergentMatrix):
        gap = psi_rl.index - psi_r.index
        if l is not None and gap != l and gap != 0:
            raise MismatchedIndices(
                f"Expected indices r and r+{l}, got {psi_r.index} and {psi_rl.index}"
            )
        r = psi_r.index
    else:
        r = None
    A, B = _as_matrix(psi_r), _as_matrix(psi_rl)

    inv_a = psi_r.inverse() if r is not None else mat_inv_unimodular(A)
    by_trace = (inv_a @ B).trace
    if r is None:
        return by_trace

    d1 = B.b * A.c - A.a * B.d
    d2 = B.a * A.d - A.b * B.c
    by_det = parity_sign(r) * (d1 - d2)
    if by_det != by_trace:
        raise TraceMismatch(f"Trace {by_trace} and determinant form {by_det} disagree")
    return by_trace


def t_double(t_k, kl: int):
    """t_{2k} = t_k^2 - 2(-1)^(kl); kl is the integer product k*l"""
    return t_k * t_k - 2 * parity_sign(kl)


def t_pair_step(t_k, t_k1, t0, t1, kl: int):
    """(t_{2k}, t_{2k+1}) = t_k (t_k, t_{k+1}) - (-1)^(kl) (t_0, t_1)"""
    s = parity_sign(kl)
    return t_k * t_k - s * t0, t_k * t_k1 - s * t1


class TraceTable:
    """
    Memo of t_k for one expansion

    Missing entries are filled by halving: t_{2z} from t_z, t_{2z+1}
    from t_z and t_{z+1}.
    """

    def __init__(self, l: int, t1, counter: OpCounter | None = None):
        self.l = l
        self.t1 = t1
        self.counter = counter
        self.values = {0: 2, 1: t1}

    def __contains__(self, k: int) -> bool:
        return k in self.values

    def __getitem__(self, k: int):
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def _tick(self):
        if self.counter is not None:
            self.counter.trace_ops += 1

    def put(self, k: int, value):
        self.values[k] = value
        self._tick()
        return value

    def ensure(self, k: int):
        """t_k, computing and storing whatever is missing"""
        if k < 0:
            raise ValueError(f"Trace index must be >= 0, got {k}")
        if k in self.values:
            return self.values[k]
        z = k // 2
        if k % 2 == 0:
            return self.put(k, t_double(self.ensure(z), z * self.l))
        tz, tz1 = self.ensure(z), self.ensure(z + 1)
        return self.put(k, tz * tz1 - parity_sign(z * self.l) * self.t1)

    get = ensure

    def direct(self, k: int):
        """t_k as the signed dilated family at t_1, by plain recurrence"""
        return signed_dilated_T(self.l, k, self.t1)

    def clear(self):
        self.values = {0: 2, 1: self.t1}

    def as_dict(self) -> dict:
        return {str(k): str(v) for k, v in sorted(self.values.items())}


def validate_nested(ms, ks):
    """
    Check k_0 = 1 and k_j = 1 + 2^{m_{q+1-j}} k_{j-1}, m_1 >= 0, m_i > 0

    Raises:
        InvalidDecomposition
    """
    q = len(ms)
    if q == 0:
        raise InvalidDecomposition("Empty decomposition")
    if ms[0] < 0 or any(m <= 0 for m in ms[1:]):
        raise InvalidDecomposition(f"Exponents must be m_1 >= 0 and m_i > 0, got {list(ms)}")
    if len(ks) != q or ks[0] != 1:
        raise InvalidDecomposition(f"Need {q} multipliers starting at 1, got {list(ks)}")
    for j in range(1, q):
        if ks[j] != 1 + (ks[j - 1] << ms[q - j]):
            raise InvalidDecomposition(f"k_{j} = {ks[j]} does not follow from the exponents")


def needed_traces(ms, ks) -> list[int]:
    """Indices k_{j-1} 2^i, i < m_{q+1-j}, j = 1..q, used by the nested algorithm"""
    q = len(ms)
    return sorted({ks[j - 1] << i for j in range(1, q + 1) for i in range(ms[q - j])})


def alg3_traces(ms, ks, t1, l: int, table: TraceTable | None = None,
                counter: OpCounter | None = None) -> TraceTable:
    """
    Produce the traces the nested algorithm needs, level by level

    Level j walks the doublings of w = k_{j-1}, carrying the pair
    (t_x, t_{x+1}) so the next odd multiplier k_j = 2z + 1 costs one
    product. The last level only needs single doublings. Entries already
    in the table are reused; nothing is filled in behind the schedule.

    Raises:
        InvalidDecomposition
        TraceMismatch: a needed trace was not produced by the schedule
    """
    validate_nested(ms, ks)
    if table is None:
        table = TraceTable(l, t1, counter)
    q = len(ms)
    p = q - 1 if ms[0] == 0 else q

    def have(k, compute):
        return table[k] if k in table else table.put(k, compute())

    def s(k):
        return parity_sign(k * l)

    x, tx, tx1 = 1, t1, None
    for j in range(1, p + 1):
        last = j == p
        if j > 1:
            # x = z from the previous level, next multiplier 2z + 1
            z, tz, tz1 = x, tx, tx1
            x = 2 * z + 1
            tx = have(x, lambda: tz * tz1 - s(z) * t1)
            tx1 = None if last else have(x + 1, lambda: tz1 * tz1 - 2 * s(z + 1))
        elif not last:
            tx1 = have(2, lambda: t_double(t1, l))

        for _ in range(1, ms[q - j]):
            if last:
                tx = have(2 * x, lambda: t_double(tx, l * x))
                x *= 2
            else:
                t2x, t2x1 = t_pair_step(tx, tx1, 2, t1, l * x)
                tx, tx1 = have(2 * x, lambda: t2x), have(2 * x + 1, lambda: t2x1)
                x *= 2

    missing = [k for k in needed_traces(ms, ks) if k not in table]
    if missing:
        raise TraceMismatch(f"Level schedule left traces {missing} unset for m={list(ms)} k={list(ks)}")
    logger.debug("Trace table for m=%s k=%s holds %d entries", list(ms), list(ks), len(table))
    return table
