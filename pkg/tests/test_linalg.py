import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cartesian_ghw.errors import CapExceeded
from cartesian_ghw.field import field_make
from cartesian_ghw.linalg import (
    MatrixGF,
    enumerate_subspaces,
    matmul,
    nullspace_basis,
    rank,
    row_basis,
    row_space_support,
    rref,
)

F2, F3 = field_make(2), field_make(3)


def M(spec, rows):
    return MatrixGF(spec, np.array(rows, dtype=np.int64))


def test_rref_examples():
    I = M(F2, np.eye(3, dtype=int))
    R, piv = rref(I)
    assert R == I and piv == (0, 1, 2)
    R, piv = rref(M(F2, [[1, 1, 1]]))
    assert R.tolist() == [[1, 1, 1]] and piv == (0,)
    assert rank(M(F3, [[1, 1, 0], [2, 2, 0]])) == 1


def test_nullspace_examples():
    N = nullspace_basis(M(F2, [[1, 1, 1]]))
    assert N.rows == 2
    assert not matmul(F2, np.array([[1, 1, 1]]), N.data.T).any()
    assert nullspace_basis(M(F2, np.eye(3, dtype=int))).rows == 0
    assert nullspace_basis(M(F3, np.zeros((2, 3), dtype=int))).rows == 3


def test_row_space_support_examples():
    assert row_space_support(M(F2, [[0, 1, 0, 1], [0, 0, 1, 1]])) == {1, 2, 3}
    assert row_space_support(M(F2, np.zeros((2, 4), dtype=int))) == set()
    assert row_space_support(M(F3, [[1, 2, 0]])) == {0, 1}


def test_enumerate_subspaces_examples():
    got = [S.tolist() for S in enumerate_subspaces(2, 1, F2)]
    assert sorted(got) == sorted([[[1, 0]], [[0, 1]], [[1, 1]]])
    got = list(enumerate_subspaces(3, 3, F3))
    assert len(got) == 1 and got[0].tolist() == np.eye(3, dtype=int).tolist()
    assert sum(1 for _ in enumerate_subspaces(4, 2, F2)) == 35
    with pytest.raises(CapExceeded):
        next(enumerate_subspaces(6, 3, F3, cap=100))


def test_subspaces_are_distinct():
    seen = set()
    for S in enumerate_subspaces(4, 2, F3):
        R, _ = rref(S)
        seen.add(tuple(map(tuple, R.tolist())))
    assert len(seen) == 130


def test_matrix_is_immutable():
    A = M(F2, [[1, 0]])
    with pytest.raises(ValueError):
        A.data[0, 0] = 0


@st.composite
def matrices(draw):
    q = draw(st.sampled_from([2, 3, 4, 5, 7, 9]))
    r, c = draw(st.integers(1, 6)), draw(st.integers(1, 7))
    seed = draw(st.integers(0, 2**32 - 1))
    data = np.random.default_rng(seed).integers(0, q, size=(r, c))
    return MatrixGF(field_make(q), data)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_rref(A):
    spec = A.spec
    R, piv = rref(A)
    k = rank(A)
    assert len(piv) == k
    assert rank(R) == k
    # R is reduced: pivot columns are unit vectors
    for i, p in enumerate(piv):
        col = R.data[:, p]
        assert col[i] == 1 and int(np.count_nonzero(col)) == 1
    N = nullspace_basis(A)
    assert N.rows == A.cols - k
    if N.rows:
        assert not matmul(spec, A.data, N.data.T).any()
        assert rank(N) == N.rows
    B = row_basis(A)
    assert B.rows == k
    # same row space: stacking adds nothing
    assert rank(MatrixGF(spec, np.vstack([A.data, B.data]))) == k
    assert rank(A.T) == k
