import cmath
import math

import pytest
from hypothesis import given, strategies as st

from kfsusy.qnum import (DegenerateBaseError, Deformation, principal_sqrt, qexp, qfactorial,
                         qnumber, root_qfactorial)


@pytest.mark.parametrize("k", range(2, 13))
def test_deformation_invariants(k):
    d = Deformation(k)
    assert abs(d.q**k - 1) < 1e-14
    assert abs(d.q * d.qbar - 1) < 1e-14
    assert all(abs(d.q**j - 1) > 1e-3 for j in range(1, k))


def test_deformation_rejects_small_k():
    with pytest.raises(ValueError):
        Deformation(1)


def test_qnumber_examples():
    q3 = Deformation(3).q
    assert qnumber(0, 0.3 + 0.1j) == 0
    assert abs(qnumber(2, -1)) < 1e-15
    assert abs(qnumber(2, q3) - cmath.exp(1j * math.pi / 3)) < 1e-14


def test_qnumber_degenerate_base():
    with pytest.raises(DegenerateBaseError):
        qnumber(3, 1 + 1e-14)


@given(st.integers(1, 30), st.floats(0.05, 6.2))
def test_qnumber_is_geometric_sum(n, phi):
    p = cmath.exp(1j * phi)
    assert abs(qnumber(n, p) - sum(p**j for j in range(n))) < 1e-12


@given(st.integers(0, 10), st.floats(0.05, 6.2))
def test_qfactorial_recursion(n, phi):
    p = cmath.exp(1j * phi)
    assert abs(qfactorial(n + 1, p) - qfactorial(n, p) * qnumber(n + 1, p)) < 1e-9


def test_qfactorial_examples():
    q3 = Deformation(3).q
    assert qfactorial(0, q3) == 1
    assert qfactorial(1, q3) == 1
    assert abs(qfactorial(2, q3) - cmath.exp(1j * math.pi / 3)) < 1e-14


def test_principal_sqrt_branch():
    assert principal_sqrt(1) == 1
    assert principal_sqrt(-1) == 1j
    assert abs(principal_sqrt(qnumber(2, Deformation(3).q)) - cmath.exp(1j * math.pi / 6)) < 1e-14


@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_principal_sqrt_squares_back(z):
    w = principal_sqrt(z)
    assert abs(w * w - z) <= 1e-12 * max(1.0, abs(z))
    # just below the cut the phase rounds onto -pi/2
    assert -math.pi / 2 - 1e-12 <= cmath.phase(w) <= math.pi / 2


@pytest.mark.parametrize("k", range(2, 9))
def test_root_qfactorial_squares_to_qfactorial(k):
    q = Deformation(k).q
    for n in range(k):
        assert abs(root_qfactorial(n, q) ** 2 - qfactorial(n, q)) < 1e-12


def test_root_qfactorial_differs_from_root_of_product():
    # the factorwise branch is not the principal root of the product at k=5, n=4
    q = Deformation(5).q
    assert abs(root_qfactorial(4, q) + principal_sqrt(qfactorial(4, q))) < 1e-12


def test_qexp_scalars():
    assert qexp(0, Deformation(3).q, 3) == 1
    assert qexp(1, -1, 2) == 2
