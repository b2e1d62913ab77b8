from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triangpoly.exactlin import (SparseMatrix, canonical_span, congruence_signature, extend_basis,
                                 image_basis, kernel_basis, primitive_integer, rank, solve)
from triangpoly.tutte import GraphView, graph_chain_complex

from oracles import sym

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def int_matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return SparseMatrix.from_dense(rows, cols=c) if r else SparseMatrix(0, c)


def test_no_stored_zeros():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(3, 6)})
    assert m.entries() == {(1, 1): Fraction(1, 2)}
    with pytest.raises(IndexError):
        SparseMatrix(1, 1, {(2, 0): 1})


@pytest.mark.parametrize("dense, expected", [
    ([[1, 2], [2, 4]], 1),
    ([[0] * 5] * 3, 0),
])
def test_rank_examples(dense, expected):
    assert rank(SparseMatrix.from_dense(dense)) == expected


def test_rank_k4_boundary():
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    d1 = graph_chain_complex(GraphView(4, edges)).boundary(1)
    assert d1.shape == (4, 6)
    assert rank(d1) == 3


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(2)) == []
    assert len(kernel_basis(SparseMatrix(2, 3))) == 3
    c3 = graph_chain_complex(GraphView(3, [(0, 1), (1, 2), (0, 2)])).boundary(1)
    ker = kernel_basis(c3)
    assert len(ker) == 1
    assert all(x == 0 for x in c3 @ ker[0])
    assert sorted(abs(x) for x in ker[0]) == [1, 1, 1]


def test_image_examples():
    assert len(image_basis(SparseMatrix.identity(2))) == 2
    assert image_basis(SparseMatrix(3, 2)) == []
    assert len(image_basis(SparseMatrix.from_dense([[1, 1], [1, 1]]))) == 1


def test_solve_examples():
    assert solve(SparseMatrix.identity(3), [1, 2, 3]) == [1, 2, 3]
    assert solve(SparseMatrix(2, 2), [1, 0]) is None
    assert solve(SparseMatrix.from_dense([[2]]), [3]) == [Fraction(3, 2)]


@pytest.mark.parametrize("dense, expected", [
    ([[2, 0], [0, -3]], (1, 1, 0)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[0, 0], [0, 0]], (0, 0, 2)),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 0]], (1, 1, 1)),
])
def test_signature_examples(dense, expected):
    assert congruence_signature(SparseMatrix.from_dense(dense)) == expected


def test_signature_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        congruence_signature(SparseMatrix.from_dense([[0, 1], [-1, 0]]))
    with pytest.raises(ValueError):
        congruence_signature(SparseMatrix(2, 3))


@settings(max_examples=80, deadline=None)
@given(int_matrices())
def test_rank_nullity_and_transpose(m):
    k = kernel_basis(m)
    assert rank(m) + len(k) == m.cols
    assert rank(m) == rank(m.transpose())
    for v in k:
        assert all(x == 0 for x in m @ v)
    assert len(image_basis(m)) == rank(m)


@settings(max_examples=40, deadline=None)
@given(int_matrices(max_dim=5))
def test_rank_matches_sympy(m):
    expected = 0 if 0 in m.shape else sym(m).rank()
    assert rank(m) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n))))
def test_signature_basis_invariance(pair):
    a, p = pair
    n = len(a)
    s = SparseMatrix.from_dense([[a[i][j] + a[j][i] for j in range(n)] for i in range(n)])
    pm = SparseMatrix.from_dense(p)
    sig = congruence_signature(s)
    assert sum(sig) == n
    if rank(pm) == n:
        assert congruence_signature(pm.transpose() @ s @ pm) == sig


def test_signature_matches_eigenvalues():
    import numpy as np

    rng = np.random.default_rng(5)
    for _ in range(30):
        a = rng.integers(-3, 4, size=(5, 5))
        s = a + a.T
        ev = np.linalg.eigvalsh(s.astype(float))
        expected = (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum()))
        assert congruence_signature(SparseMatrix.from_dense(s.tolist())) == expected


def test_canonical_span_is_basis_free():
    a = canonical_span([[1, 2, 0], [0, 1, 1]], 3)
    b = canonical_span([[1, 3, 1], [2, 4, 0], [1, 3, 1]], 3)
    assert a == b
    assert canonical_span([], 3) == ()


def test_extend_and_primitive():
    ext = extend_basis([[1, 0, 0]], [[2, 0, 0], [1, 1, 0], [0, 1, 0]])
    assert ext == [[1, 1, 0]]
    assert primitive_integer([Fraction(1, 2), Fraction(-1, 3)]) == [3, -2]
    assert primitive_integer([Fraction(-2), 4]) == [1, -2]


def test_matrix_algebra():
    a = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert a.transpose().transpose() == a
    assert a @ SparseMatrix.identity(2) == a
    assert (a - a).is_zero()
    assert a @ [1, 1] == [3, 7]
    assert hash(a) == hash(SparseMatrix.from_dense([[1, 2], [3, 4]]))
