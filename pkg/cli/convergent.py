"""
`convergent`: p_m and q_m by any method, with optional cross-check
"""

import logging

from cfrac.exact import parity_sign
from cfrac.expansion import psi_naive
from cfrac.fast import ConvergentSession, decompose_binary, decompose_nested
from cfrac.householder import ratio
from utils.parsing import format_scalar
from utils.report import RunReport

from .common import Stopwatch, load_expansion

logger = logging.getLogger(__name__)


def _decomposition(cf, m):
    if m < cf.r + cf.l:
        return {"fallback": "naive"}
    return {
        "binary": decompose_binary(m, cf.r, cf.l).as_dict(),
        "nested": decompose_nested(m, cf.r, cf.l).as_dict(),
    }


def cmd_convergent(text: str, m: int, method: str = "nested", order: int | None = None,
                   verify: bool = False, hurwitz: bool = False, evaluator: str = "matrix",
                   max_steps: int | None = None) -> RunReport:
    """
    Raises:
        NotGaloisForm: decimation / householder on a non-Galois expansion
        MethodIndexMismatch: decimation / householder at m != k*l - 1
    """
    watch = Stopwatch()
    cf = load_expansion(text, hurwitz, max_steps)
    session = ConvergentSession(cf, evaluator=evaluator)
    p, q = session.convergent(m, method, order)

    outputs = {
        "index": m,
        "p": format_scalar(p),
        "q": format_scalar(q),
        "r": cf.r,
        "l": cf.l,
    }
    if method in ("binary", "nested"):
        outputs["decomposition"] = _decomposition(cf, m)
    if method in ("decimation", "householder"):
        outputs["k"] = (m + 1) // cf.l
        outputs["pell"] = p * p - cf.pell_radicand * q * q == parity_sign(outputs["k"] * cf.l)

    agreement = None
    if method == "householder":
        oracle = session.oracle_ratio(m, order)
        outputs["oracle_ratio"] = format_scalar(oracle)
        agreement = oracle == ratio(p, q)
    if verify:
        naive = psi_naive(cf, m)
        matches = (naive.p, naive.q) == (p, q)
        agreement = matches if agreement is None else agreement and matches
        logger.info("Cross-check against iteration at m=%d: %s", m, matches)

    return RunReport(
        command="convergent",
        method=method,
        inputs={"input": text, "m": m, "order": order, "hurwitz": hurwitz, "evaluator": evaluator},
        outputs=outputs,
        op_counts=session.last_ops.as_dict(),
        agreement=agreement,
        wall_time_ns=watch.elapsed(),
    )
