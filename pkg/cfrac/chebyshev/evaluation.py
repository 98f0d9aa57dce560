"""
Evaluation of the recurrence families at a point

Three methods that must agree exactly:
- eval_naive: k steps of the recurrence
- eval_matrix_power: binary powering of the companion matrix M_l
- eval_halve_square: index halving through Tr(M_l^m) = 2 T_m and
  Det(M_l^m) = (-1)^(ml)
"""

from __future__ import annotations

from dataclasses import dataclass

from cfrac.exact import Mat2, lin_comb, mat_pow, parity_sign
from utils.op_counter import OpCounter

from .families import RecurrenceFamily, signed


def eval_naive(fam: RecurrenceFamily, k: int, x, counter: OpCounter | None = None):
    """v_k(x) by direct iteration, k >= -1"""
    if k < -1:
        raise ValueError(f"Index must be >= -1, got {k}")
    if k == -1:
        return fam.before_zero(x)
    v0, v1 = fam.initial(x)
    if k == 0:
        return v0
    ax = fam.coefficient * x
    for _ in range(k - 1):
        v0, v1 = v1, ax * v1 + fam.sign * v0
    if counter is not None:
        counter.trace_ops += max(k - 1, 0)
    return v1


def signed_T(l: int, k: int, x):
    return eval_naive(signed("T", l), k, x)


def signed_U(l: int, k: int, x):
    """U^l_k(x), with U^l_{-1} = 0"""
    if k == -1:
        return 0
    return eval_naive(signed("U", l), k, x)


def signed_dilated_T(l: int, k: int, x):
    return eval_naive(signed("TD", l), k, x)


@dataclass(frozen=True, slots=True)
class ChebMatrixState:
    """
    Xi^l_n = [[T_{n+1}, U_{n+1}], [T_n, U_n]] for the signed families at x
    """

    l: int
    n: int
    x: object
    xi: Mat2

    @property
    def T(self):
        return self.xi.c

    @property
    def U(self):
        return self.xi.d

    @property
    def T_next(self):
        return self.xi.a

    @property
    def U_next(self):
        return self.xi.b

    @property
    def U_prev(self):
        """U_{n-1} from U_{n+1} = 2x U_n - (-1)^l U_{n-1}"""
        return parity_sign(self.l) * (2 * self.x * self.U - self.U_next)


def companion(l: int, x) -> Mat2:
    """M_l = [[2x, -(-1)^l], [1, 0]]"""
    return Mat2(2 * x, -parity_sign(l), 1, 0)


def initial_state(l: int, x) -> Mat2:
    """Xi^l_0 = [[x, 2x], [1, 1]]"""
    return Mat2(x, 2 * x, 1, 1)


def matrix_power_state(l: int, k: int, x, counter: OpCounter | None = None) -> ChebMatrixState:
    if k < 0:
        raise ValueError(f"Index must be >= 0, got {k}")
    xi = mat_pow(companion(l, x), k, counter) @ initial_state(l, x) if k else initial_state(l, x)
    if k and counter is not None:
        counter.matrix_mults += 1
    return ChebMatrixState(l, k, x, xi)


def eval_matrix_power(l: int, k: int, x, counter: OpCounter | None = None):
    """(T^l_k, U^l_k, U^l_{k-1}) via Xi^l_k = M_l^k Xi^l_0"""
    state = matrix_power_state(l, k, x, counter)
    return state.T, state.U, state.U_prev


def eval_halve_square(l: int, n: int, x, counter: OpCounter | None = None) -> ChebMatrixState:
    """
    Xi^l_n by halving the index:
      Xi_{2m}   = 2 T_m Xi_m     - (-1)^(ml) Xi_0
      Xi_{2m+1} = 2 T_m Xi_{m+1} - (-1)^(ml) Xi_1
    Carries the pair (Xi_m, Xi_{m+1}) down the bits of n.
    """
    if n < 0:
        raise ValueError(f"Index must be >= 0, got {n}")
    xi0 = initial_state(l, x)
    xi1 = companion(l, x) @ xi0
    if n == 0:
        return ChebMatrixState(l, 0, x, xi0)

    m, lo, hi = 0, xi0, xi1
    for bit in bin(n)[2:]:
        two_t = 2 * lo.c
        sigma = parity_sign(m * l)
        odd = lin_comb(two_t, hi, -sigma, xi1, counter)
        if bit == "1":
            even_next = lin_comb(2 * hi.c, hi, -parity_sign((m + 1) * l), xi0, counter)
            lo, hi, m = odd, even_next, 2 * m + 1
        else:
            even = lin_comb(two_t, lo, -sigma, xi0, counter)
            lo, hi, m = even, odd, 2 * m
    return ChebMatrixState(l, n, x, lo)
