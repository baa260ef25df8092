"""Integral elementary divisors (Smith normal form) over the integers.

The diagonalization kernel comes in two builds with identical pivoting: a
compiled int64 kernel with overflow detection (``_snf_native``) and a
pure-Python one over arbitrary-precision ints (``_snf_py``). The compiled
kernel is used when it imported and the input fits; on overflow the work is
redone in Python, so results never depend on which kernel ran.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from . import _snf_py
from .exactmat import IntMatrix, determinant

try:
    from . import _snf_native
except ImportError:  # extension not built
    _snf_native = None

#: kernel tried first by ``backend="auto"``
DEFAULT_BACKEND = "native" if _snf_native is not None else "python"

ORACLE_MAX_DIM = 8


class DivisorError(ValueError):
    """A divisor list or matrix violates a precondition."""


@dataclass(frozen=True)
class DivisorList:
    """Elementary divisors ``d_1 | d_2 | ... | d_s`` with zeros as a suffix."""

    raw: tuple[int, ...]

    def __post_init__(self):
        raw = tuple(int(d) for d in self.raw)
        object.__setattr__(self, "raw", raw)
        if any(d < 0 for d in raw):
            raise DivisorError(f"negative divisor in {raw}")
        for a, b in zip(raw, raw[1:]):
            if a == 0 and b != 0:
                raise DivisorError(f"zeros must form a suffix: {raw}")
            if a != 0 and b % a:
                raise DivisorError(f"not a divisibility chain: {raw}")

    @property
    def normalized(self) -> tuple[int, ...]:
        """The raw list with every 1 removed."""
        return tuple(d for d in self.raw if d != 1)

    @property
    def zero_count(self) -> int:
        return sum(1 for d in self.raw if d == 0)

    def to_json(self) -> dict:
        return {"raw": [str(d) for d in self.raw],
                "normalized": [str(d) for d in self.normalized]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: dict) -> "DivisorList":
        return cls(tuple(int(s) for s in obj["raw"]))


def _chain(diag: list[int]) -> tuple[int, ...]:
    """Turn any non-negative diagonal into the equivalent divisibility chain."""
    nonzero = [d for d in diag if d]
    zeros = len(diag) - len(nonzero)
    n = len(nonzero)
    # diag(a, b) ~ diag(gcd, lcm); after pass i, entry i divides all later ones
    for i in range(n):
        for j in range(i + 1, n):
            a, b = nonzero[i], nonzero[j]
            if b % a:
                g = math.gcd(a, b)
                nonzero[i], nonzero[j] = g, a // g * b
    return tuple(nonzero) + (0,) * zeros


def available_backends() -> list[str]:
    return ["python"] + (["native"] if _snf_native is not None else [])


def diagonalize(m: IntMatrix, backend: str = "auto") -> list[int]:
    """Absolute diagonal after elimination, before the divisibility repair.

    ``backend`` is ``"auto"`` (``DEFAULT_BACKEND``, with a Python retry on
    overflow), ``"native"`` (raises ``OverflowError`` instead) or ``"python"``.
    """
    if backend not in ("auto", "native", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "native" and _snf_native is None:
        raise RuntimeError("native SNF kernel is not built")
    if backend == "auto":
        backend = DEFAULT_BACKEND if _snf_native is not None else "python"
        lenient = True
    else:
        lenient = False
    if backend == "native":
        try:
            return _snf_native.snf_diagonal(m.tolist(), m.rows, m.cols)
        except OverflowError:
            if not lenient:
                raise
    return _snf_py.snf_diagonal(m.tolist(), m.rows, m.cols)


def smith_normal_form(m: IntMatrix, backend: str = "auto") -> DivisorList:
    """Integral elementary divisors of ``m`` (length ``min(rows, cols)``)."""
    return DivisorList(_chain(diagonalize(m, backend)))


def determinantal_divisor_oracle(m: IntMatrix, max_dim: int = ORACLE_MAX_DIM) -> DivisorList:
    """Elementary divisors from gcds of minors: ``d_k = D_k / D_{k-1}``.

    Enumerates every k x k minor, so only small square matrices are accepted.
    """
    if not m.is_square():
        raise DivisorError("oracle needs a square matrix")
    n = m.rows
    if n > max_dim:
        raise DivisorError(f"oracle limited to dimension {max_dim}, got {n}")
    data = m.tolist()
    prev = 1
    out = []
    for k in range(1, n + 1):
        g = 0
        for rs in combinations(range(n), k):
            sub_rows = [data[i] for i in rs]
            for cs in combinations(range(n), k):
                g = math.gcd(g, determinant(IntMatrix([[r[j] for j in cs] for r in sub_rows])))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            # every larger minor expands in these, so they all vanish too
            out.extend([0] * (n - k + 1))
            break
        out.append(g // prev)
        prev = g
    return DivisorList(tuple(out))


def strip_one_zero(d: DivisorList, m_checked: IntMatrix) -> DivisorList:
    """Drop one trailing zero from the divisors of a zero-row/column-sum matrix.

    The matrix is re-checked rather than trusted: the rule is only valid when
    every row sum and every column sum vanishes.
    """
    if any(m_checked.row_sums()) or any(m_checked.col_sums()):
        raise DivisorError("row and column sums must all be zero")
    if not d.raw or d.raw[-1] != 0:
        raise DivisorError(f"divisor list {d.raw} has no zero to strip")
    return DivisorList(d.raw[:-1])


def normalize_invariant(d: DivisorList) -> tuple[int, ...]:
    """Goeritz-invariant presentation: 1s dropped, ``(1,)`` when nothing remains."""
    return d.normalized or (1,)
