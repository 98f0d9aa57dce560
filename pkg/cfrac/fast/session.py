"""
Convergent session: one expansion, its caches and its operation counts
Repeated queries share the precalculated prefix and the trace table
"""

from __future__ import annotations

import logging

from cfrac.errors import MethodIndexMismatch
from cfrac.expansion import CFExpansion, ConvergentMatrix, psi_naive, psi_prefix
from cfrac.householder import HouseholderConfig, householder_cheb, householder_oracle, ratio
from utils.op_counter import OpCounter

from .algorithms import Precalc, psi_binary, psi_nested
from .decimation import decimation_closed_form, decimation_multiplier, period_end
from .traces import TraceTable

logger = logging.getLogger(__name__)

MATRIX_METHODS = ("naive", "binary", "nested")
METHODS = MATRIX_METHODS + ("decimation", "householder")


class ConvergentSession:
    """
    Computes convergents of one expansion by any method
    Features:
    - Prefix Psi_{-1} .. Psi_{r+l} computed once
    - Trace table memoized across queries
    - Operation counts per query and per session
    """

    def __init__(self, cf: CFExpansion, evaluator: str = "matrix"):
        self.cf = cf
        self.evaluator = evaluator
        self.counter = OpCounter()
        self.last_ops = OpCounter()
        self.query_count = 0
        self._precalc = None
        self._table = None
        self._psi_end = None

    @property
    def precalc(self) -> Precalc:
        if self._precalc is None:
            self._precalc = Precalc(self.cf, self.counter)
        return self._precalc

    @property
    def table(self) -> TraceTable:
        if self._table is None:
            self._table = TraceTable(self.cf.l, self.precalc.t1, self.counter)
        return self._table

    @property
    def t1(self):
        return self.precalc.t1

    @property
    def psi_end(self) -> ConvergentMatrix:
        """Psi_{l-1}, only for Galois-form expansions"""
        if self._psi_end is None:
            self._psi_end = period_end(self.cf, self.counter)
        return self._psi_end

    def trace_at(self, n: int):
        """Tr(Psi_n^-1 Psi_{n+l}); the same value for every n >= r"""
        if n < self.cf.r:
            raise ValueError(f"Trace is n-independent only for n >= r={self.cf.r}, got {n}")
        prefix = psi_prefix(self.cf, n + self.cf.l)
        return (prefix[n + 1].inverse() @ prefix[n + self.cf.l + 1].matrix).trace

    def _begin(self) -> OpCounter:
        self.query_count += 1
        return self.counter.snapshot()

    def _end(self, before: OpCounter):
        self.last_ops = self.counter - before

    def psi(self, m: int, method: str = "nested") -> ConvergentMatrix:
        if method not in MATRIX_METHODS:
            raise ValueError(f"Method {method!r} does not produce a matrix")
        before = self._begin()
        if method == "naive":
            result = psi_naive(self.cf, m, self.counter)
        elif m < self.cf.r + self.cf.l:
            logger.debug("m=%d below r+l, %s falls back to iteration", m, method)
            result = psi_naive(self.cf, m, self.counter)
        elif method == "binary":
            result = psi_binary(self.cf, m, self.counter, self.precalc, self.table)
        else:
            result = psi_nested(self.cf, m, self.counter, self.precalc, self.table)
        self._end(before)
        return result

    def householder_config(self, m: int, order: int | None = None) -> HouseholderConfig:
        """
        Raises:
            MethodIndexMismatch: m is not k*l - 1 with k >= 2, or order != k - 1
        """
        k = decimation_multiplier(self.cf, m)
        if k < 2:
            raise MethodIndexMismatch(f"Householder needs m = k*{self.cf.l} - 1 with k >= 2")
        if order is not None and order != k - 1:
            raise MethodIndexMismatch(f"Order {order} gives index {(order + 1) * self.cf.l - 1}, not {m}")
        return HouseholderConfig(d=k - 1, N=self.cf.pell_radicand, l=self.cf.l)

    def convergent(self, m: int, method: str = "nested", order: int | None = None):
        """
        (p_m, q_m) by the requested method

        Raises:
            NotGaloisForm: decimation / householder on a non-Galois expansion
            MethodIndexMismatch: decimation / householder at m != k*l - 1
        """
        if method not in METHODS:
            raise ValueError(f"Unknown method {method!r}, expected one of {METHODS}")
        if method in MATRIX_METHODS:
            psi = self.psi(m, method)
            return psi.p, psi.q

        k = decimation_multiplier(self.cf, m)
        if method == "householder":
            cfg = self.householder_config(m, order)
        before = self._begin()
        psi_end = self.psi_end
        if method == "decimation":
            result = decimation_closed_form(self.cf, k, self.evaluator, self.counter, psi_end)
        else:
            result = householder_cheb(psi_end.p, psi_end.q, cfg)
        self._end(before)
        return result

    def oracle_ratio(self, m: int, order: int | None = None):
        """Householder step evaluated from derivatives at p_{l-1}/q_{l-1}"""
        cfg = self.householder_config(m, order)
        return householder_oracle(ratio(self.psi_end.p, self.psi_end.q), cfg)

    def reset_state(self):
        """Reset counters and the trace memo (keeps the precalculated prefix)"""
        self.counter.reset()
        self.last_ops = OpCounter()
        self.query_count = 0
        if self._table is not None:
            self._table.clear()

    def get_stats(self):
        """Get session statistics"""
        return {
            "expansion": self.cf.as_dict(),
            "queries": self.query_count,
            "op_counts": self.counter.as_dict(),
            "trace_table_size": 0 if self._table is None else len(self._table),
            "precalculated": self._precalc is not None,
        }
