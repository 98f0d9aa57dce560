"""
`expand`: partial quotients, pre-period and period of a quadratic irrational
"""

import logging

from cfrac.expansion import check_galois_form
from utils.parsing import format_elem, format_scalar
from utils.report import RunReport

from .common import Stopwatch, load_expansion

logger = logging.getLogger(__name__)


def cmd_expand(text: str, hurwitz: bool = False, max_steps: int | None = None) -> RunReport:
    """
    Raises:
        InputParseError, PerfectSquare, UnsupportedRadicand, NoPeriodWithinBound
    """
    watch = Stopwatch()
    cf = load_expansion(text, hurwitz, max_steps)
    logger.info("Expanded %s: r=%d l=%d", text, cf.r, cf.l)
    return RunReport(
        command="expand",
        inputs={"input": text, "hurwitz": hurwitz},
        outputs={
            "alpha": format_elem(cf.alpha),
            "kind": cf.kind,
            "head": [format_scalar(c) for c in cf.head],
            "cycle": [format_scalar(c) for c in cf.cycle],
            "r": cf.r,
            "l": cf.l,
            "galois_form": check_galois_form(cf),
        },
        wall_time_ns=watch.elapsed(),
    )
