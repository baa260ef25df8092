"""Exact integer Laurent polynomials in one variable.

Used for the determinants of the tridiagonal matrices ``F_k(w)`` and
``F~_k(w)`` over ``Z[w, w^-1]`` and for torus-link Alexander polynomials.
"""

from __future__ import annotations

import json
from math import gcd
from typing import Mapping

from .exactmat import IntMatrix, identity, power


class InexactDivision(ArithmeticError):
    """Polynomial division left a non-zero remainder."""


class LaurentPoly:
    """Sparse map ``exponent -> coefficient`` with no stored zeros."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def max_exp(self) -> int:
        return max(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._c.items()
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Synthetic division from the top exponent down.

        Stops once the quotient would need an exponent below what an exact
        quotient can contain; whatever is left is the remainder.
        """
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        quot: dict[int, int] = {}
        top = other.max_exp()
        lead = other._c[top]
        floor = (self.min_exp() - other.min_exp()) if rem else 0
        while rem:
            e = max(rem)
            qe = e - top
            if qe < floor or rem[e] % lead:
                break
            qc = rem[e] // lead
            quot[qe] = qc
            for de, dc in other._c.items():
                k = qe + de
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {r}")
        return q

    def __floordiv__(self, other):
        return self.exact_div(_coerce(other))

    def evaluate(self, x: int) -> int:
        if abs(x) != 1 and any(e < 0 for e in self._c):
            raise ValueError("integer evaluation with negative exponents needs x = +-1")
        # x^-e == x^e for x = +-1
        return sum(c * x ** abs(e) for e, c in self._c.items())

    def substitute_matrix(self, w: IntMatrix) -> IntMatrix:
        """Evaluate at an integrally invertible square matrix ``w``."""
        n = w.rows
        total = IntMatrix.zeros(n)
        for e, c in sorted(self._c.items()):
            total = total + c * power(w, e)
        return total

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._c.items())}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json()})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


W = LaurentPoly.monomial(1)
T = LaurentPoly.monomial(1)


def _x() -> LaurentPoly:
    return W + W ** -1


def f_det_closed(k: int) -> LaurentPoly:
    """``sum_{i=-k}^{k} (-w)^i``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return LaurentPoly({i: (-1) ** (i % 2) for i in range(-k, k + 1)})


def f_det_recurrence(k: int) -> LaurentPoly:
    """``det F_{h+1} = -x det F_h - det F_{h-1}`` from ``F_0 = 1``, ``F_1 = 1 - x``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = _x()
    prev, cur = LaurentPoly.const(1), 1 - x
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, -x * cur - prev
    return cur


def f_det(k: int) -> LaurentPoly:
    """Determinant of ``F_k(w)``, computed two ways and cross-checked."""
    closed = f_det_closed(k)
    rec = f_det_recurrence(k)
    if closed != rec:
        raise AssertionError(f"det F_{k}: closed form {closed} != recurrence {rec}")
    return closed


def f_tilde_det(k: int) -> LaurentPoly:
    """Determinant of ``F~_k(w)``: ``det F_k + det F_{k-1}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return f_det(k) + f_det(k - 1)


def tridiagonal_f(k: int, tilde: bool = False) -> list[list[LaurentPoly]]:
    """The k x k matrix ``F_k(w)`` (or ``F~_k(w)``) with Laurent entries."""
    if k < 1:
        raise ValueError("k must be positive")
    x = _x()
    zero, one = LaurentPoly(), LaurentPoly.const(1)
    m = [[zero] * k for _ in range(k)]
    for i in range(k):
        m[i][i] = -x
        if i + 1 < k:
            m[i][i + 1] = m[i + 1][i] = one
    m[k - 1][k - 1] = m[k - 1][k - 1] + 1
    if tilde:
        m[0][0] = m[0][0] + 1
    return m


def laurent_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row (small sizes only)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j, a in enumerate(m[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * laurent_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_normalized(p: int, q: int) -> LaurentPoly:
    """``(1-t)(1-t^{pq/r})^r / ((1-t^p)(1-t^q))`` by exact division."""
    if p < 2 or q < 2:
        raise ValueError("torus link parameters must be >= 2")
    r = gcd(p, q)
    one = LaurentPoly.const(1)
    num = (one - T) * (one - T ** (p * q // r)) ** r
    den = (one - T ** p) * (one - T ** q)
    return num.exact_div(den)


def expand_at_minus_one(poly: LaurentPoly) -> tuple[int, int]:
    """``(k, a_k)`` with ``P(t) = a_k (t+1)^k + a_{k+1} (t+1)^{k+1} + ...``."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has no expansion")
    if poly.min_exp() < 0:
        raise ValueError("expansion needs a genuine polynomial")
    t_plus_1 = T + 1
    k = 0
    while poly.evaluate(-1) == 0:
        poly = poly.exact_div(t_plus_1)
        k += 1
    return k, poly.evaluate(-1)
