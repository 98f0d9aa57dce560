"""
`identities`: the randomized identity suite
"""

import logging

from cfrac.chebyshev import run_identity_suite
from cfrac.errors import IdentityFailure
from utils.report import RunReport

from .common import Stopwatch

logger = logging.getLogger(__name__)


def cmd_identities(trials: int, seed: int, max_k: int) -> RunReport:
    """
    Raises:
        IdentityFailure: any identity failed at any point (the report is attached)
    """
    watch = Stopwatch()
    results = run_identity_suite(trials, seed, max_k)
    failed = [tag for tag, res in results.items() if res["failed"]]
    report = RunReport(
        command="identities",
        inputs={"trials": trials, "seed": seed, "max_k": max_k},
        outputs={
            "passed": {tag: res["passed"] for tag, res in results.items()},
            "failed": {tag: res["failed"] for tag, res in results.items()},
        },
        checks=[
            {"identity": tag, "first_failure": res["first_failure"]}
            for tag, res in results.items() if res["failed"]
        ],
        agreement=not failed,
        wall_time_ns=watch.elapsed(),
    )
    if failed:
        error = IdentityFailure(f"Identities failed: {', '.join(failed)}")
        error.report = report
        raise error
    return report
