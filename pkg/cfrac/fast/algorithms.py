"""
Logarithmic-time convergent matrices

Both algorithms start from Psi_r, Psi_{r+l}, Psi_{m0} (direct iteration)
and step with
    Psi_{n + 2^{i+1} k l} = t_{2^i k} Psi_{n + 2^i k l} - (-1)^(2^i k l) Psi_n
"""

from __future__ import annotations

import logging

from cfrac.errors import MTooSmall
from cfrac.exact import Mat2, lin_comb, mat_mul, parity_sign
from cfrac.expansion import CFExpansion, ConvergentMatrix, psi_naive, psi_prefix
from utils.op_counter import OpCounter

from .decomposition import decompose_binary, decompose_nested
from .traces import TraceTable, alg3_traces, t1_from_psi

logger = logging.getLogger(__name__)


def _doubling_sign(i: int, k: int, l: int) -> int:
    """(-1)^(2^i k l), from parity alone"""
    return parity_sign(k * l) if i == 0 else 1


class Precalc:
    """
    Matrices every fast query on one expansion shares

    prefix[i + 1] is Psi_i for i = -1 .. r + l.
    """

    def __init__(self, cf: CFExpansion, counter: OpCounter | None = None):
        self.cf = cf
        self.prefix = psi_prefix(cf, cf.r + cf.l, counter)
        self.t1 = t1_from_psi(self.psi(cf.r), self.psi(cf.r + cf.l), cf.l)

    def psi(self, n: int) -> ConvergentMatrix:
        return self.prefix[n + 1]

    def shifted(self, m0: int, counter: OpCounter | None = None) -> tuple[Mat2, Mat2]:
        """
        (Psi_{m0+l}, Phi = Psi_{m0}^-1 Psi_{m0+l})

        Psi_{m0+l} = Psi_{r+l} Psi_r^-1 Psi_{m0} costs two products unless
        m0 = r; Phi costs one.
        """
        cf = self.cf
        p_rl, p_m0 = self.psi(cf.r + cf.l).matrix, self.psi(m0).matrix
        if m0 != cf.r:
            p_m0l = mat_mul(mat_mul(p_rl, self.psi(cf.r).inverse(), counter), p_m0, counter)
        else:
            p_m0l = p_rl
        phi = mat_mul(self.psi(m0).inverse(), p_m0l, counter)
        return p_m0l, phi


def _prepare(cf, counter, precalc, table):
    precalc = precalc or Precalc(cf, counter)
    table = table if table is not None else TraceTable(cf.l, precalc.t1, counter)
    return precalc, table


def psi_binary(cf: CFExpansion, m: int, counter: OpCounter | None = None,
               precalc: Precalc | None = None, table: TraceTable | None = None) -> ConvergentMatrix:
    """
    Psi_m by the binary scheme; falls back to direct iteration for m < r + l

    Costs q + 2 products (q when m0 = r) and sum(n_i) linear combinations.
    """
    try:
        dec = decompose_binary(m, cf.r, cf.l)
    except MTooSmall:
        logger.debug("m=%d below r+l, iterating directly", m)
        return psi_naive(cf, m, counter)
    precalc, table = _prepare(cf, counter, precalc, table)
    l = cf.l

    base = precalc.psi(dec.m0).matrix
    nxt, phi = precalc.shifted(dec.m0, counter)
    for j, n_j in enumerate(dec.exponents):
        cur = nxt
        for i in range(n_j):
            cur = lin_comb(table.get(1 << i), cur, -_doubling_sign(i, 1, l), base, counter)
        if j != dec.q - 1:
            base = cur
            nxt = mat_mul(cur, phi, counter)
    return ConvergentMatrix(m, cur)


def psi_nested(cf: CFExpansion, m: int, counter: OpCounter | None = None,
               precalc: Precalc | None = None, table: TraceTable | None = None) -> ConvergentMatrix:
    """
    Psi_m by the nested (Horner-type) scheme; falls back for m < r + l

    Costs q + 2 products (q when m0 = r) and sum(m_i) linear combinations.
    """
    try:
        dec = decompose_nested(m, cf.r, cf.l)
    except MTooSmall:
        logger.debug("m=%d below r+l, iterating directly", m)
        return psi_naive(cf, m, counter)
    precalc, table = _prepare(cf, counter, precalc, table)
    l, q = cf.l, dec.q
    ms, ks = dec.exponents, dec.multipliers
    alg3_traces(ms, ks, precalc.t1, l, table, counter)

    p_m0 = precalc.psi(dec.m0).matrix
    cur, phi = precalc.shifted(dec.m0, counter)
    for j in range(q):
        k = ks[j]
        for i in range(ms[q - 1 - j]):
            cur = lin_comb(table[k << i], cur, -_doubling_sign(i, k, l), p_m0, counter)
        if j != q - 1:
            cur = mat_mul(cur, phi, counter)
    return ConvergentMatrix(m, cur)
