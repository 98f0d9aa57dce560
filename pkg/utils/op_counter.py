"""
Operation counting for the fast convergent algorithms
Tracks matrix-level and scalar-level work so cost statements can be checked
"""

from dataclasses import dataclass, asdict


@dataclass
class OpCounter:
    """
    Monotone counters, reset per run

    matrix_mults: 2x2 matrix products
    lin_combs: scalar*matrix linear combinations
    trace_ops: trace-table formula applications
    precalc_steps: naive partial-quotient steps spent on precalculation
    """

    matrix_mults: int = 0
    lin_combs: int = 0
    trace_ops: int = 0
    precalc_steps: int = 0

    def reset(self):
        self.matrix_mults = 0
        self.lin_combs = 0
        self.trace_ops = 0
        self.precalc_steps = 0

    @property
    def matrix_level(self) -> int:
        """Matrix products plus linear combinations"""
        return self.matrix_mults + self.lin_combs

    def as_dict(self) -> dict:
        return asdict(self)

    def snapshot(self) -> "OpCounter":
        return OpCounter(**asdict(self))

    def __sub__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(
            self.matrix_mults - other.matrix_mults,
            self.lin_combs - other.lin_combs,
            self.trace_ops - other.trace_ops,
            self.precalc_steps - other.precalc_steps,
        )
