"""The W(m, n, e1, e2, k, h) reduction family for odd p.

``realize`` builds the n x n matrix, ``step`` applies one of the two
Z-equivalence descents, and ``descend`` iterates until n == 2m. Along a
trace gcd(m, n) and ``ell`` are conserved; the terminal state is read off in
closed form and checked against a direct Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import VerificationError
from .exactmat import IntMatrix
from .smith import DivisorList, smith_normal_form
from .torus import ODD_EVEN, ODD_ODD, TorusParams, canonicalize

OP1 = "op1"
OP2 = "op2"


@dataclass(frozen=True)
class WState:
    m: int
    n: int
    e1: int
    e2: int
    k: int
    h: int

    def __post_init__(self):
        if not 0 < self.m < self.n:
            raise ValueError(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if self.e1 not in (1, -1) or self.e2 not in (1, -1):
            raise ValueError("e1 and e2 must be +1 or -1")

    @property
    def terminal(self) -> bool:
        return self.n == 2 * self.m

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.m, self.n, self.e1, self.e2, self.k, self.h)

    def __str__(self) -> str:
        return "W({},{},{},{},{},{})".format(*self.as_tuple())


@dataclass
class DescentTrace:
    states: list[WState]
    ops: list[str] = field(default_factory=list)

    @property
    def terminal(self) -> WState:
        return self.states[-1]


def realize(s: WState) -> IntMatrix:
    m, n = s.m, s.n
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 1
    for i in range(n - m):
        a[i][i + m] += s.e1
    for j in range(m):
        a[n - m + j][j] += s.e2
    last = a[n - 1]
    for j in range(1, m + 1):
        last[j - 1] += (-1) ** j * s.k
    for j in range(1, n - m + 1):
        last[m + j - 1] += (-1) ** j * s.h
    return IntMatrix(a)


def step(s: WState) -> tuple[WState, str]:
    """One descent; returns the new state and the operation used."""
    m, n, e1, e2, k, h = s.as_tuple()
    if s.terminal:
        raise ValueError(f"{s} is terminal")
    if 2 * m < n:
        return WState(m, n - m, e1, -e1 * e2, h - e1 * k, (-1) ** m * h), OP1
    return WState(2 * m - n, m, -e1 * e2, e2, (-1) ** (n - m) * k, h - e1 * k), OP2


def descend(s: WState) -> DescentTrace:
    trace = DescentTrace([s])
    while not s.terminal:
        s, op = step(s)
        trace.states.append(s)
        trace.ops.append(op)
    return trace


def ell(s: WState) -> int:
    return abs(s.k * s.m + (-1) ** s.m * s.h * (s.n - s.m))


def initial_state_odd_odd(t: TorusParams) -> WState:
    if t.parity_class != ODD_ODD:
        raise ValueError(f"T({t.p},{t.q}) is not odd-odd")
    if t.p == t.q:
        raise ValueError("p == q gives no state with m < n; E+A+W^p is already 2E+A")
    return WState(t.p, t.q, 1, 1, 1, 0)


def initial_state_odd_even(t: TorusParams) -> WState:
    if t.parity_class != ODD_EVEN:
        raise ValueError(f"T({t.p},{t.q}) is not odd-even")
    s, rest = divmod(t.p, t.q)
    return WState(rest, t.q, 1, 1, s + 1, -s)


def initial_state(t: TorusParams) -> WState:
    if t.parity_class == ODD_ODD:
        return initial_state_odd_odd(t)
    if t.parity_class == ODD_EVEN:
        return initial_state_odd_even(t)
    raise ValueError(f"T({t.p},{t.q}) is even-even; the G_4 pipeline applies instead")


def terminal_closed_form(s: WState) -> tuple[int, ...] | None:
    """Normalized invariant of a terminal state from its shape, None if unrecognized."""
    if not s.terminal:
        raise ValueError(f"{s} is not terminal")
    r = s.m
    shape = (s.e1, s.e2, s.k, s.h)
    if shape in ((1, -1, -1, 0), (-1, 1, 0, 1)):
        return (2,) * (r - 1) if r > 1 else (1,)
    if (s.e1, s.e2) == (1, 1):
        pp = abs(s.k - s.h)
        if r == 1:
            return (pp,)
        head = () if pp == 1 else (pp,)
        return head + (0,) * (r - 1)
    return None


def terminal_invariant(s: WState) -> DivisorList:
    """SNF of the realized terminal matrix, checked against its closed form."""
    closed = terminal_closed_form(s)
    d = smith_normal_form(realize(s))
    computed = d.normalized or (1,)
    if closed is not None and computed != closed:
        raise VerificationError("terminal SNF", "terminal closed form",
                                f"{s}: {computed} vs {closed}")
    return d


def trace_for(p: int, q: int) -> DescentTrace:
    return descend(initial_state(canonicalize(p, q)))
