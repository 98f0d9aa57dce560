"""
`bench`: naive vs binary vs nested vs decimation, timed and operation-counted
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from cfrac.errors import CFError, CostInvariantViolation
from cfrac.expansion import check_galois_form
from cfrac.fast import ConvergentSession, decompose_binary, decompose_nested
from utils.config import Config
from utils.parsing import format_scalar
from utils.report import RunReport

from .common import Stopwatch, load_expansion

logger = logging.getLogger(__name__)

DEFAULT_INPUTS = ("sqrt(2)",)


def _timed(fn, repeats: int):
    """(last result, median wall time in ns)"""
    times, result = [], None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - start)
    return result, int(np.median(times))


def run_case(text: str, m: int, hurwitz: bool, repeats: int, max_steps: int | None) -> dict:
    """
    One (input, m) case; top-level so worker processes can pickle it

    Every method runs in a fresh session so precalculation is timed too.
    """
    cf = load_expansion(text, hurwitz, max_steps)
    methods = ["naive", "binary", "nested"]
    if check_galois_form(cf) and (m + 1) % cf.l == 0 and m + 1 >= cf.l:
        methods.append("decimation")

    case = {"input": text, "m": m, "r": cf.r, "l": cf.l, "methods": {}}
    values = {}
    for method in methods:
        def query():
            session = ConvergentSession(cf)
            return session, session.convergent(m, method)

        (session, pq), wall = _timed(query, repeats)
        values[method] = pq
        case["methods"][method] = {"wall_time_ns": wall, "op_counts": session.last_ops.as_dict()}

    case["agree"] = len(set(values.values())) == 1
    case["p"] = format_scalar(values["naive"][0])
    case["q"] = format_scalar(values["naive"][1])
    if m >= cf.r + cf.l:
        binary = decompose_binary(m, cf.r, cf.l)
        nested = decompose_nested(m, cf.r, cf.l)
        case["expected"] = {
            "binary_lin_combs": binary.lin_comb_count,
            "nested_lin_combs": nested.lin_comb_count,
            "nested_as_binary": nested.binary_lin_comb_count,
            "matrix_mults": binary.expected_mults,
        }
    return case


def cost_violations(case: dict) -> list[str]:
    """Op-count invariants of one case; empty when all hold"""
    expected = case.get("expected")
    if not expected:
        return []
    ops = case["methods"]
    b, n = ops["binary"]["op_counts"], ops["nested"]["op_counts"]
    label = f"{case['input']} m={case['m']}"
    problems = []
    if n["lin_combs"] > b["lin_combs"]:
        problems.append(f"{label}: nested uses more linear combinations than binary")
    if b["lin_combs"] != expected["binary_lin_combs"]:
        problems.append(f"{label}: binary linear combinations {b['lin_combs']} != sum n_i")
    if n["lin_combs"] != expected["nested_lin_combs"]:
        problems.append(f"{label}: nested linear combinations {n['lin_combs']} != sum m_i")
    if expected["binary_lin_combs"] != expected["nested_as_binary"]:
        problems.append(f"{label}: sum n_i != sum (q+1-i) m_i")
    for name, counts in (("binary", b), ("nested", n)):
        if counts["matrix_mults"] != expected["matrix_mults"]:
            problems.append(f"{label}: {name} used {counts['matrix_mults']} products, "
                            f"expected {expected['matrix_mults']}")
    return problems


def ordering_violations(cases: list[dict], min_m: int) -> list[str]:
    """At the largest m (when large enough) the fast methods must beat iteration"""
    largest = max(c["m"] for c in cases)
    if largest < min_m:
        return []
    problems = []
    for case in (c for c in cases if c["m"] == largest):
        naive = case["methods"]["naive"]["wall_time_ns"]
        for method in ("nested", "decimation"):
            entry = case["methods"].get(method)
            if entry and entry["wall_time_ns"] >= naive:
                problems.append(f"{case['input']} m={largest}: {method} not faster than naive")
    return problems


def cmd_bench(m_list: list[int], inputs=DEFAULT_INPUTS, out: str | None = None,
              hurwitz: bool = False, workers: int | None = None, repeats: int | None = None,
              max_steps: int | None = None) -> RunReport:
    """
    Raises:
        CostInvariantViolation: an op-count or timing-order invariant failed
    """
    watch = Stopwatch(force=True)
    workers = workers or Config.get_bench_workers()
    repeats = repeats or Config.get_bench_repeats()
    jobs = [(text, m, hurwitz, repeats, max_steps) for text in inputs for m in m_list]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(run_case, *zip(*jobs)))
    else:
        cases = [run_case(*job) for job in jobs]

    problems = [p for case in cases for p in cost_violations(case)]
    problems += ordering_violations(cases, Config.get_bench_ordering_min_m())
    disagreeing = [f"{c['input']} m={c['m']}" for c in cases if not c["agree"]]

    report = RunReport(
        command="bench",
        inputs={"m_list": list(m_list), "inputs": list(inputs), "repeats": repeats, "workers": workers},
        outputs={"cases": cases},
        checks=[{"violation": p} for p in problems],
        agreement=not disagreeing,
        wall_time_ns=watch.elapsed(),
    )
    if out:
        Path(out).write_text(report.to_json() + "\n", encoding="utf-8")
        logger.info("Bench report written to %s", out)
    if disagreeing:
        error = CFError(f"Methods disagree: {', '.join(disagreeing)}")
        error.report = report
        raise error
    if problems:
        error = CostInvariantViolation(problems[0])
        error.report = report
        raise error
    return report
