"""
Helpers shared by the command modules
"""

import time

from cfrac.expansion import CFExpansion, expand_quadratic
from utils.config import Config
from utils.parsing import parse_surd


def load_expansion(text: str, hurwitz: bool = False, max_steps: int | None = None) -> CFExpansion:
    """Parse an input string and expand it (Hurwitz when asked or when Gaussian)"""
    alpha = parse_surd(text, gaussian=hurwitz)
    return expand_quadratic(alpha, max_steps)


class Stopwatch:
    """Wall time in ns, reported only when timings are switched on"""

    def __init__(self, force: bool = False):
        self.enabled = force or Config.record_timings()
        self.start = time.perf_counter_ns()

    def elapsed(self):
        if not self.enabled:
            return None
        return time.perf_counter_ns() - self.start
