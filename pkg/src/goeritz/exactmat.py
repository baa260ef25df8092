"""Dense matrices of arbitrary-precision integers.

Besides the usual arithmetic this module builds the structured matrices that
torus-link Goeritz matrices are made from: the identity ``E_q``, the cyclic
shift ``W_q``, the nilpotent shift ``N_q``, ``X_q = W_q + W_q^{-1}`` and the
auxiliary blocks ``A_{p,q}`` and ``B_{m,n}``.

Indexing is 0-based throughout.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense integer matrix stored row-major as a tuple of tuples."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        _check_size(rows, cols)
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence[int]) -> "IntMatrix":
        _check_size(rows, cols)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)])

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def entries(self) -> list[int]:
        """Row-major flat list of entries."""
        return [x for r in self._data for x in r]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._data]

    def col_sums(self) -> list[int]:
        return [sum(c) for c in zip(*self._data)]

    # value semantics

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    # arithmetic

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self._data])

    def __mul__(self, c: int) -> "IntMatrix":
        if not isinstance(c, int):
            return NotImplemented
        return IntMatrix([[c * a for a in r] for r in self._data])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        cols = list(zip(*other._data))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._data])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._data))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch: {self.shape} vs {other.shape}")

    # serialization

    def to_text(self) -> str:
        """Dense text format: ``rows cols`` header then one line per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(x) for x in r) for r in self._data)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 2:
            raise ValueError("missing 'rows cols' header")
        rows, cols = int(lines[0][0]), int(lines[0][1])
        body = lines[1:]
        if len(body) != rows or any(len(r) != cols for r in body):
            raise ValueError(f"body does not match header {rows}x{cols}")
        return cls([[int(x) for x in r] for r in body])


def _check_size(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")


def identity(n: int) -> IntMatrix:
    _check_size(n, n)
    return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(rows: int, cols: int | None = None) -> IntMatrix:
    return IntMatrix.zeros(rows, cols)


def _shift_size(q: int) -> None:
    if q < 2:
        raise ValueError(f"shift matrices need q >= 2, got {q}")


def cyclic_shift(q: int) -> IntMatrix:
    """``W_q``: ones at ``(i, i+1 mod q)``."""
    _shift_size(q)
    return IntMatrix([[1 if j == (i + 1) % q else 0 for j in range(q)] for i in range(q)])


def nil_shift(q: int) -> IntMatrix:
    """``N_q``: ones on the superdiagonal."""
    _shift_size(q)
    return IntMatrix([[1 if j == i + 1 else 0 for j in range(q)] for i in range(q)])


def x_matrix(q: int) -> IntMatrix:
    """``X_q = W_q + W_q^{-1}``."""
    w = cyclic_shift(q)
    return w + w.transpose()


def a_block(p: int, q: int) -> IntMatrix:
    """q x q matrix, zero except the last row ``(-1, 1, -1, ...)`` over the first p columns."""
    if p < 1 or q < 1:
        raise ValueError("a_block needs positive sizes")
    if p > q:
        raise ValueError(f"a_block needs p <= q, got p={p}, q={q}")
    data = [[0] * q for _ in range(q)]
    data[-1][:p] = [(-1) ** j for j in range(1, p + 1)]
    return IntMatrix(data)


def b_block(m: int, n: int) -> IntMatrix:
    """m x n matrix with every row ``(-2, 2, -2, 2, ...)``."""
    _check_size(m, n)
    row = [2 * (-1) ** j for j in range(1, n + 1)]
    return IntMatrix([row] * m)


def _is_permutation(m: IntMatrix) -> bool:
    if not m.is_square():
        return False
    for r in m._data:
        if sorted(r) != [0] * (m.cols - 1) + [1]:
            return False
    return all(sorted(c) == [0] * (m.rows - 1) + [1] for c in zip(*m._data))


def _unit_triangular_inverse(m: IntMatrix) -> IntMatrix | None:
    """Inverse of a triangular matrix with +-1 diagonal, else None."""
    n = m.rows
    upper = all(m[i, j] == 0 for i in range(n) for j in range(i))
    lower = all(m[i, j] == 0 for i in range(n) for j in range(i + 1, n))
    if not (upper or lower) or any(m[i, i] not in (1, -1) for i in range(n)):
        return None
    if lower:
        inv_t = _unit_triangular_inverse(m.transpose())
        return None if inv_t is None else inv_t.transpose()
    # back substitution for an upper unitriangular system, column by column
    inv = [[0] * n for _ in range(n)]
    for col in range(n):
        for i in range(n - 1, -1, -1):
            s = (1 if i == col else 0) - sum(m[i, j] * inv[j][col] for j in range(i + 1, n))
            inv[i][col] = s * m[i, i]  # d = +-1 so 1/d == d
    return IntMatrix(inv)


def integral_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a permutation or unit-triangular matrix.

    Anything else raises ``ValueError``; there is no rational fallback.
    """
    if not m.is_square():
        raise ValueError("only square matrices have inverses")
    if _is_permutation(m):
        return m.transpose()
    inv = _unit_triangular_inverse(m)
    if inv is None:
        raise ValueError("negative power needs a permutation or unit-triangular matrix")
    return inv


def power(m: IntMatrix, k: int) -> IntMatrix:
    """``m**k`` by repeated squaring; negative k only for integrally invertible m."""
    if not m.is_square():
        raise ValueError("power of a non-square matrix")
    if k < 0:
        m, k = integral_inverse(m), -k
    result = identity(m.rows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def delete_row_col(m: IntMatrix, i: int, j: int) -> IntMatrix:
    """The matrix with row ``i`` and column ``j`` removed (negative indices allowed)."""
    if m.rows < 2 or m.cols < 2:
        raise ValueError("cannot delete from a matrix with a single row or column")
    i %= m.rows
    j %= m.cols
    return IntMatrix([r[:j] + r[j + 1:] for k, r in enumerate(m._data) if k != i])


def block_assemble(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Glue a rectangular grid of blocks into one matrix."""
    if not grid or not grid[0]:
        raise ValueError("empty block grid")
    heights = [row[0].rows for row in grid]
    widths = [b.cols for b in grid[0]]
    out: list[list[int]] = []
    for bi, brow in enumerate(grid):
        if len(brow) != len(widths):
            raise ValueError("ragged block grid")
        for bj, blk in enumerate(brow):
            if blk.shape != (heights[bi], widths[bj]):
                raise ValueError(f"block ({bi},{bj}) has shape {blk.shape}, "
                                 f"expected {(heights[bi], widths[bj])}")
        for i in range(heights[bi]):
            out.append([x for blk in brow for x in blk.row(i)])
    return IntMatrix(out)


def submatrix(m: IntMatrix, row0: int, row1: int, col0: int, col1: int) -> IntMatrix:
    """Rows ``row0:row1`` and columns ``col0:col1``."""
    return IntMatrix([r[col0:col1] for r in m._data[row0:row1]])


def block_extract(m: IntMatrix, heights: Sequence[int], widths: Sequence[int]) -> list[list[IntMatrix]]:
    """Inverse of :func:`block_assemble` for the given block sizes."""
    if sum(heights) != m.rows or sum(widths) != m.cols:
        raise ValueError("block sizes do not tile the matrix")
    grid = []
    r0 = 0
    for h in heights:
        row = []
        c0 = 0
        for w in widths:
            row.append(submatrix(m, r0, r0 + h, c0, c0 + w))
            c0 += w
        grid.append(row)
        r0 += h
    return grid


def direct_sum(*blocks: IntMatrix) -> IntMatrix:
    n = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = [[0] * c for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(out)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    a = m.tolist()
    n = m.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Rank over the rationals via fraction-free row reduction."""
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            a[i] = [(x * p - f * y) // prev for x, y in zip(a[i], a[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r
