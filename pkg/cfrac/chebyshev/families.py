"""
Chebyshev-type families as two-term recurrences

v_{k+2} = A*x*v_{k+1} + s*v_k with v_0 = seed0 and v_1 = lin*x + const
"""

from dataclasses import dataclass

from cfrac.errors import UnknownIdentity


@dataclass(frozen=True, slots=True)
class RecurrenceFamily:
    name: str
    coefficient: int
    sign: int
    seed0: int
    seed1: tuple[int, int]

    def initial(self, x):
        lin, const = self.seed1
        return self.seed0, lin * x + const

    def before_zero(self, x):
        """v_{-1}, from running the recurrence one step backwards"""
        v0, v1 = self.initial(x)
        return self.sign * (v1 - self.coefficient * x * v0)


# first / second / third / fourth kind
T = RecurrenceFamily("T", 2, -1, 1, (1, 0))
U = RecurrenceFamily("U", 2, -1, 1, (2, 0))
V = RecurrenceFamily("V", 2, -1, 1, (2, -1))
W = RecurrenceFamily("W", 2, -1, 1, (2, 1))

# dilated: TD_k(x) = 2 T_k(x/2), UD_k(x) = U_k(x/2)
TD = RecurrenceFamily("TD", 1, -1, 2, (1, 0))
UD = RecurrenceFamily("UD", 1, -1, 1, (1, 0))

# sign-changed
TBAR = RecurrenceFamily("TBAR", 2, 1, 1, (1, 0))
UBAR = RecurrenceFamily("UBAR", 2, 1, 1, (2, 0))
TDBAR = RecurrenceFamily("TDBAR", 1, 1, 2, (1, 0))
UDBAR = RecurrenceFamily("UDBAR", 1, 1, 1, (1, 0))

FAMILIES = {f.name: f for f in (T, U, V, W, TD, UD, TBAR, UBAR, TDBAR, UDBAR)}

_SIGNED = {
    "T": (T, TBAR),
    "U": (U, UBAR),
    "TD": (TD, TDBAR),
    "UD": (UD, UDBAR),
}


def signed(kind: str, l: int) -> RecurrenceFamily:
    """
    Signed family: the plain family for even l, the sign-changed one for odd l

    kind is "T", "U", "TD" or "UD".
    """
    try:
        even, odd = _SIGNED[kind]
    except KeyError:
        raise UnknownIdentity(f"No signed family {kind!r}") from None
    return odd if l & 1 else even


def get_family(name: str) -> RecurrenceFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise UnknownIdentity(f"No recurrence family {name!r}") from None
