import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from kfsusy.operators import (Basis, BasisMismatchError, Operator, StateVector, commutator,
                              is_diagonal, max_abs, q_commutator, restrict_safe, safe_indices,
                              tensor)


def _complex_matrix(n):
    finite = st.floats(-5, 5, allow_nan=False)
    return arrays(np.complex128, (n, n), elements=st.builds(complex, finite, finite))


def test_basis_sizes_and_labels():
    assert Basis.fermion(3).size == 3
    assert Basis.boson(5).size == 5
    b = Basis.tensor(4, 3)
    assert b.size == 12
    assert b.labels()[5] == (1, 2)
    assert b.index((2, 1)) == 7


def test_mismatched_bases_rejected():
    a = Operator.identity(Basis.fermion(3))
    b = Operator.identity(Basis.boson(3))
    with pytest.raises(BasisMismatchError):
        a @ b
    with pytest.raises(BasisMismatchError):
        a + b


def test_operator_shape_checked():
    with pytest.raises(ValueError):
        Operator(Basis.fermion(3), np.zeros((2, 2)))


def test_matrix_is_read_only():
    a = Operator.identity(Basis.fermion(2))
    with pytest.raises(ValueError):
        a.matrix[0, 0] = 5


@settings(max_examples=40)
@given(_complex_matrix(3), _complex_matrix(3))
def test_adjoint_of_product(x, y):
    b = Basis.fermion(3)
    a, c = Operator(b, x), Operator(b, y)
    assert max_abs((a @ c).adjoint() - c.adjoint() @ a.adjoint()) < 1e-9


@settings(max_examples=40)
@given(_complex_matrix(3), _complex_matrix(3), _complex_matrix(3))
def test_product_associative(x, y, z):
    b = Basis.fermion(3)
    a, c, d = Operator(b, x), Operator(b, y), Operator(b, z)
    assert max_abs((a @ c) @ d - a @ (c @ d)) < 1e-9


@settings(max_examples=30)
@given(_complex_matrix(3), _complex_matrix(3), _complex_matrix(2), _complex_matrix(2))
def test_tensor_mixed_product(b1, b2, f1, f2):
    B, F = Basis.boson(3), Basis.fermion(2)
    lhs = tensor(Operator(B, b1), Operator(F, f1)) @ tensor(Operator(B, b2), Operator(F, f2))
    rhs = tensor(Operator(B, b1) @ Operator(B, b2), Operator(F, f1) @ Operator(F, f2))
    assert max_abs(lhs - rhs) < 1e-8


def test_commutators():
    b = Basis.fermion(2)
    x = Operator(b, [[0, 1], [0, 0]])
    y = x.adjoint()
    assert max_abs(commutator(x, y) - Operator(b, np.diag([1, -1]))) == 0
    assert max_abs(q_commutator(x, y, -1) - Operator.identity(b)) == 0


def test_safe_subspace():
    basis = Basis.tensor(5, 2)
    idx = safe_indices(basis, 2)
    assert list(idx) == [0, 1, 2, 3, 4, 5]
    a = Operator(basis, np.arange(100.0).reshape(10, 10))
    assert restrict_safe(a, 2).matrix.shape == (6, 6)


def test_is_diagonal_and_state():
    b = Basis.boson(3)
    assert is_diagonal(Operator(b, np.diag([1, 2, 3])))
    assert not is_diagonal(Operator(b, np.ones((3, 3))))
    v = StateVector(b, [1, 0, 0])
    assert (Operator(b, np.diag([2, 2, 2])) @ v)[0] == 2
