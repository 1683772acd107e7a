from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ascgraph.ratlinalg import SparseRationalMatrix, kernel_basis, rank, solve


def naive_rank(rows):
    """Textbook Gauss-Jordan over Fraction, used as an independent check."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    r = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


entries = st.fractions(min_value=-4, max_value=4, max_denominator=3) | st.just(Fraction(0))


@st.composite
def matrices(draw, max_dim=6):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    return [[draw(entries) for _ in range(cols)] for _ in range(rows)]


def test_small_ranks():
    assert rank(SparseRationalMatrix(3, 3)) == 0
    assert rank(SparseRationalMatrix.from_dense([[1, 2], [3, 4]])) == 2
    assert rank(SparseRationalMatrix.from_dense([[1, 2], [2, 4]])) == 1


def test_kernel_and_solve_examples():
    m = SparseRationalMatrix.from_dense([[1, -1]])
    assert kernel_basis(m) == [[1, 1]]
    assert solve(SparseRationalMatrix.from_dense([[1], [1]]), [1, 2]) is None
    assert solve(SparseRationalMatrix.from_dense([[2, 0], [0, 3]]), [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]


def test_entry_bounds():
    m = SparseRationalMatrix(2, 2)
    with pytest.raises(IndexError):
        m[2, 0] = 1
    with pytest.raises(ValueError):
        SparseRationalMatrix.from_dense([[1, 2], [3]])


@settings(max_examples=150)
@given(matrices())
def test_rank_matches_naive(rows):
    assert rank(SparseRationalMatrix.from_dense(rows)) == naive_rank(rows)


@settings(max_examples=100)
@given(matrices())
def test_rank_nullity(rows):
    m = SparseRationalMatrix.from_dense(rows)
    ker = kernel_basis(m)
    assert len(ker) + rank(m) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.matvec(v))
    if ker:
        assert naive_rank(ker) == len(ker)


@settings(max_examples=100)
@given(matrices(), st.data())
def test_solve_round_trip(rows, data):
    m = SparseRationalMatrix.from_dense(rows)
    x = [data.draw(entries) for _ in range(m.cols)]
    b = m.matvec(x)
    y = solve(m, b)
    assert y is not None and m.matvec(y) == b


@settings(max_examples=60)
@given(matrices())
def test_inconsistent_detected(rows):
    m = SparseRationalMatrix.from_dense(rows)
    if rank(m) == m.rows:
        return
    # a vector outside the column space: append it and the rank grows
    for k in range(m.rows):
        b = [Fraction(int(i == k)) for i in range(m.rows)]
        aug = [r + [v] for r, v in zip(rows, b)]
        if naive_rank(aug) > naive_rank(rows):
            assert solve(m, b) is None
            return


@settings(max_examples=60)
@given(matrices())
def test_text_round_trip(rows):
    m = SparseRationalMatrix.from_dense(rows)
    assert SparseRationalMatrix.loads(m.dumps()) == m


def test_loads_rejects_wrong_count():
    with pytest.raises(ValueError):
        SparseRationalMatrix.loads("2 2 2\n1 1 1/1\n")


@settings(max_examples=60)
@given(matrices(4), matrices(4))
def test_transpose_and_product(a, b):
    ma, mb = SparseRationalMatrix.from_dense(a), SparseRationalMatrix.from_dense(b)
    assert ma.transpose().transpose() == ma
    assert rank(ma.transpose()) == rank(ma)
    if ma.cols == mb.rows:
        prod = (ma @ mb).to_dense()
        ref = [[sum(a[i][k] * b[k][j] for k in range(ma.cols)) for j in range(mb.cols)]
               for i in range(ma.rows)]
        assert prod == ref
