"""Matrices attached to the torus link T(p, q).

Goeritz matrices (full and irreducible) for odd and even p, the reduced
q x q form ``E_q + A_{p,q} + W_q^p`` for odd p, and the even-case chain
``G_2 -> G_3 -> G_4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmat import (
    IntMatrix,
    a_block,
    b_block,
    block_assemble,
    block_extract,
    cyclic_shift,
    delete_row_col,
    identity,
    integral_inverse,
    nil_shift,
    power,
    x_matrix,
    zeros,
)

ODD_ODD = "odd-odd"
ODD_EVEN = "odd-even"
EVEN_EVEN = "even-even"

G3_VARIANTS = ("k", "p")
#: exponent of (-W_q) in G_3 that makes the block identity hold; see tests
CANONICAL_G3_VARIANT = "k"


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int
    r: int
    p_prime: int
    q_prime: int
    parity_class: str
    swapped: bool

    @property
    def k(self) -> int:
        """Block count: ``(p-1)/2`` for odd p, ``p/2`` for even p."""
        return self.p // 2


def canonicalize(p: int, q: int) -> TorusParams:
    """Order (p, q): odd member first for odd-even, otherwise p <= q."""
    if p < 2 or q < 2:
        raise ValueError(f"torus link needs p, q >= 2, got ({p}, {q})")
    swapped = False
    if p % 2 and q % 2:
        cls = ODD_ODD
        if p > q:
            p, q, swapped = q, p, True
    elif p % 2 or q % 2:
        cls = ODD_EVEN
        if p % 2 == 0:
            p, q, swapped = q, p, True
    else:
        cls = EVEN_EVEN
        if p > q:
            p, q, swapped = q, p, True
    r = gcd(p, q)
    return TorusParams(p, q, r, p // r, q // r, cls, swapped)


def _as_params(t) -> TorusParams:
    if isinstance(t, TorusParams):
        return t
    return canonicalize(*t)


def goeritz_full(t) -> IntMatrix:
    """Goeritz matrix of T(p, q); every row and column sums to zero."""
    t = _as_params(t)
    p, q = t.p, t.q
    e, x = identity(q), x_matrix(q)
    z = zeros(q)
    if p % 2:
        k = t.k
        diag = [-x] * k
        diag[-1] = -x + e
        grid = [[z] * k for _ in range(k)]
        for i in range(k):
            grid[i][i] = diag[i]
            if i + 1 < k:
                grid[i][i + 1] = grid[i + 1][i] = e
        body = block_assemble(grid)
        ones_row = IntMatrix([[1] * q + [0] * (body.cols - q)])
        return block_assemble([[IntMatrix([[-q]]), ones_row],
                               [ones_row.transpose(), body]])
    k = t.k
    diag = [-x] * k
    # with a single block both boundary corrections land on it
    diag[0] = diag[0] + e
    diag[-1] = diag[-1] + e
    grid = [[z] * k for _ in range(k)]
    for i in range(k):
        grid[i][i] = diag[i]
        if i + 1 < k:
            grid[i][i + 1] = grid[i + 1][i] = e
    return block_assemble(grid)


def goeritz_irreducible(t, drop: str | None = None) -> IntMatrix:
    """Goeritz matrix minus one row and column.

    By default the first for odd p and the last for even p; ``drop`` may be
    ``"first"`` or ``"last"`` to override.
    """
    t = _as_params(t)
    if drop is None:
        drop = "first" if t.p % 2 else "last"
    idx = {"first": 0, "last": -1}[drop]
    return delete_row_col(goeritz_full(t), idx, idx)


def _alternating_sum(w: IntMatrix, lo: int, hi: int) -> IntMatrix:
    """``sum_{i=lo}^{hi} (-W)^i``."""
    total = zeros(w.rows)
    for i in range(lo, hi + 1):
        total = total + (-1) ** (i % 2) * power(w, i)
    return total


def reduced_odd_form(t) -> IntMatrix:
    """``E_q + A_{p,q} + W_q^p`` for odd p <= q.

    Also builds ``(E+N) (-W)^k sum_{i=-k}^{k} (-W)^i`` and checks that the
    two agree entry by entry.
    """
    t = _as_params(t)
    if t.parity_class == EVEN_EVEN:
        raise ValueError("reduced_odd_form needs odd p")
    if t.p > t.q:
        raise ValueError(f"reduced_odd_form needs p <= q, got p={t.p}, q={t.q}")
    right = reduced_odd_rhs(t)
    left = reduced_odd_lhs(t)
    if left != right:
        raise AssertionError(f"(E+N)(-W)^k sum(-W)^i != E+A+W^p for T({t.p},{t.q})")
    return right


def reduced_odd_rhs(t) -> IntMatrix:
    t = _as_params(t)
    q = t.q
    return identity(q) + a_block(t.p, q) + power(cyclic_shift(q), t.p)


def reduced_odd_lhs(t, negate_shift: bool = True) -> IntMatrix:
    """``(E+N) (-W)^k sum_{i=-k}^{k} (-W)^i``.

    With ``negate_shift=False`` the multiplier is ``W^k`` instead, which
    differs from the expanded form by the sign ``(-1)^k``.
    """
    t = _as_params(t)
    q, k = t.q, t.k
    w = cyclic_shift(q)
    shift = power(w, k)
    if negate_shift:
        shift = (-1) ** k * shift
    return (identity(q) + nil_shift(q)) @ shift @ _alternating_sum(w, -k, k)


def alternating_w_form(t) -> IntMatrix:
    """``sum_{i=-k}^{k} (-W_q)^i`` for odd p = 2k+1 (any q)."""
    t = _as_params(t)
    if t.p % 2 == 0:
        raise ValueError("needs odd p")
    return _alternating_sum(cyclic_shift(t.q), -t.k, t.k)


def _require_even(t) -> TorusParams:
    t = _as_params(t)
    if t.parity_class != EVEN_EVEN:
        raise ValueError(f"T({t.p},{t.q}) is {t.parity_class}; the G_2/G_3/G_4 chain needs even p and q")
    return t


def even_g2(t) -> IntMatrix:
    """``F~_k(W_q) = sum_{|i|<=k} (-W_q)^i + sum_{|i|<=k-1} (-W_q)^i`` with k = p/2."""
    t = _require_even(t)
    w = cyclic_shift(t.q)
    k = t.k
    return _alternating_sum(w, -k, k) + _alternating_sum(w, -(k - 1), k - 1)


def even_g3(t, exponent_variant: str = CANONICAL_G3_VARIANT) -> IntMatrix:
    """``(E_q + N_q)^2 G_2 (-W_q)^e`` with e = p/2 (variant "k") or e = p (variant "p")."""
    t = _require_even(t)
    if exponent_variant not in G3_VARIANTS:
        raise ValueError(f"exponent_variant must be one of {G3_VARIANTS}")
    q = t.q
    e = t.k if exponent_variant == "k" else t.p
    en = identity(q) + nil_shift(q)
    return en @ en @ even_g2(t) @ ((-1) ** e * power(cyclic_shift(q), e))


def g3_reducer(t) -> IntMatrix:
    """``(E_q - N_q^2)(E_q - N_q^p)``; unit upper triangular."""
    t = _require_even(t)
    q = t.q
    n = nil_shift(q)
    e = identity(q)
    return (e - power(n, 2)) @ (e - power(n, t.p))


def g3_block_identity(t, exponent_variant: str) -> bool:
    """Whether ``reducer^{-1} G_3 = [[G_4, O], [*, E_{q-p}]]`` for this variant."""
    t = _require_even(t)
    p, q = t.p, t.q
    lhs = integral_inverse(g3_reducer(t)) @ even_g3(t, exponent_variant)
    if q == p:
        return lhs == even_g4(t)
    (tl, tr), (_, br) = block_extract(lhs, [p, q - p], [p, q - p])
    return tl == even_g4(t) and tr == zeros(p, q - p) and br == identity(q - p)


def even_g4(t) -> IntMatrix:
    """The p x p matrix ``E_p + [(m+1) B_{a,p}; m B_{p-a,p}] - W_p^{-a}`` with q = m p + a."""
    t = _require_even(t)
    p, q = t.p, t.q
    m, alpha = divmod(q, p)
    if alpha == 0:
        return m * b_block(p, p)
    parts = [[(m + 1) * b_block(alpha, p)], [m * b_block(p - alpha, p)]]
    return identity(p) + block_assemble(parts) - power(cyclic_shift(p), (p - alpha) % p)
