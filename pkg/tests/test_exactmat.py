import random

import pytest
from hypothesis import given, strategies as st

from goeritz.exactmat import (
    IntMatrix,
    a_block,
    b_block,
    block_assemble,
    block_extract,
    cyclic_shift,
    delete_row_col,
    determinant,
    identity,
    nil_shift,
    power,
    rank,
    x_matrix,
    zeros,
)

from conftest import random_matrix

small_ints = st.integers(min_value=-50, max_value=50)


def matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(IntMatrix)


def test_identity():
    assert identity(1) == IntMatrix([[1]])
    assert identity(2) == IntMatrix([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        identity(0)


def test_identity_law(rng):
    m = random_matrix(rng, 3, 3)
    assert identity(3) @ m == m == m @ identity(3)


def test_cyclic_shift():
    assert cyclic_shift(2) == IntMatrix([[0, 1], [1, 0]])
    assert power(cyclic_shift(3), 3) == identity(3)
    assert determinant(cyclic_shift(4)) == -1
    with pytest.raises(ValueError):
        cyclic_shift(1)


@pytest.mark.parametrize("q", range(2, 33))
def test_shift_orders(q):
    assert power(cyclic_shift(q), q) == identity(q)
    assert power(nil_shift(q), q) == zeros(q)
    assert x_matrix(q) == cyclic_shift(q) + cyclic_shift(q).T
    assert determinant(cyclic_shift(q)) == (-1) ** (q - 1)


def test_nil_shift():
    assert nil_shift(2) == IntMatrix([[0, 1], [0, 0]])
    assert power(nil_shift(3), 3) == zeros(3)
    assert power(nil_shift(2), 2) == zeros(2)
    with pytest.raises(ValueError):
        nil_shift(1)


def test_x_matrix():
    assert x_matrix(2) == IntMatrix([[0, 2], [2, 0]])
    assert x_matrix(3) == IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert x_matrix(4).row_sums() == [2, 2, 2, 2]


def test_a_block():
    assert a_block(3, 4).row(3) == (-1, 1, -1, 0)
    assert all(x == 0 for i in range(3) for x in a_block(3, 4).row(i))
    assert a_block(1, 1) == IntMatrix([[-1]])
    assert a_block(3, 3).row(2) == (-1, 1, -1)
    with pytest.raises(ValueError):
        a_block(4, 3)


def test_b_block():
    assert b_block(2, 2) == IntMatrix([[-2, 2], [-2, 2]])
    assert b_block(1, 3) == IntMatrix([[-2, 2, -2]])
    assert rank(b_block(4, 4)) == 1


def test_negative_power():
    w = cyclic_shift(4)
    assert power(w, -2) == power(w, 2)
    assert power(w, -1) @ w == identity(4)
    unipotent = identity(5) - power(nil_shift(5), 2)
    assert power(unipotent, -1) @ unipotent == identity(5)
    lower = unipotent.T
    assert power(lower, -3) @ power(lower, 3) == identity(5)
    with pytest.raises(ValueError):
        power(IntMatrix([[2, 0], [0, 1]]), -1)


def test_delete_row_col():
    m = IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert delete_row_col(m, 0, 0) == IntMatrix([[5, 6], [8, 9]])
    assert delete_row_col(m, -1, -1) == IntMatrix([[1, 2], [4, 5]])
    assert delete_row_col(m, 1, 2) == IntMatrix([[1, 2], [7, 8]])


def test_block_assemble():
    e = identity(2)
    m = block_assemble([[e, e], [e, e]])
    assert m == IntMatrix([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]])
    with pytest.raises(ValueError):
        block_assemble([[e, identity(3)]])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        identity(2) + identity(3)
    with pytest.raises(ValueError):
        IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 3), st.integers(1, 3), st.data())
def test_block_roundtrip(h1, h2, w1, w2, data):
    grid = [[data.draw(matrices(h, w)) for w in (w1, w2)] for h in (h1, h2)]
    assert block_extract(block_assemble(grid), [h1, h2], [w1, w2]) == grid


@given(matrices(3, 4))
def test_text_roundtrip(m):
    assert IntMatrix.from_text(m.to_text()) == m


def test_text_format_exact_bigints():
    big = IntMatrix([[2 ** 200, -(3 ** 150)], [0, 1]])
    text = big.to_text()
    assert text.splitlines()[0] == "2 2"
    assert IntMatrix.from_text(text) == big
    assert (big @ big)[0, 0] == 2 ** 400


def test_from_text_rejects_bad_header():
    with pytest.raises(ValueError):
        IntMatrix.from_text("2 2\n1 2\n")


@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_ring_laws(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert (a @ b).T == b.T @ a.T
    assert determinant(a @ b) == determinant(a) * determinant(b)


def test_rank_against_determinant():
    r = random.Random(5)
    for _ in range(200):
        n = r.randint(1, 5)
        m = random_matrix(r, n, n, -2, 2)
        assert (rank(m) == n) == (determinant(m) != 0)
    assert rank(IntMatrix([[1, 2, 3], [2, 4, 6]])) == 1
    assert rank(zeros(3, 2)) == 0
