import cmath
import math

import numpy as np
import pytest

from kfsusy.coherent import TailTooLargeError
from kfsusy.quon import build_quon, limit_check, limit_study, quon_coherent, quon_path
from kfsusy.qnum import root_qfactorial


@pytest.mark.parametrize("Q", [0.3, 0.9 + 0.1j, cmath.exp(0.7j)])
def test_quon_relation(Q):
    ops = build_quon(Q, 8)
    assert ops.relation_residual() < 1e-12


def test_quon_at_q1_is_boson():
    ops = build_quon(1 + 1e-9, 5)
    assert np.allclose(ops.a_minus.matrix[1, 2], math.sqrt(2), atol=1e-6)


def test_quon_coherent():
    Q = cmath.exp(0.4j)
    s = quon_coherent(0.3, Q, 20)
    assert abs(s.coeffs[3] - 0.3**3 / root_qfactorial(3, Q)) < 1e-15
    with pytest.raises(TailTooLargeError):
        quon_coherent(3.0, 0.5, 5)


def test_quon_path():
    assert abs(quon_path(3, 0.0) - cmath.exp(2j * math.pi / 3)) < 1e-15
    assert abs(abs(quon_path(3, 0.1)) - 1) < 1e-15


@pytest.mark.parametrize("k", [2, 3, 4])
def test_deviations_shrink(k):
    study = limit_study(k)
    for col in ("boson_deviation", "mixed_deviation", "fermion_deviation", "cauchy"):
        assert study.monotone(col), study.format_table()
    assert study.rows[-1].boson_deviation < 1e-2


def test_epsilon_order_is_normalized():
    a = limit_study(3, (1e-4, 1e-2, 1e-3))
    b = limit_study(3, (1e-2, 1e-3, 1e-4))
    assert [r.eps for r in a.rows] == [1e-2, 1e-3, 1e-4]
    assert [r.boson_deviation for r in a.rows] == [r.boson_deviation for r in b.rows]


def test_boson_deviation_grows_with_cutoff():
    # the commutator error scales with the occupation kept, roughly linearly in R
    small = limit_study(2, (1e-4,), cutoff=6).rows[0].boson_deviation
    large = limit_study(2, (1e-4,), cutoff=24).rows[0].boson_deviation
    assert large > 4 * small


def test_epsilon_validation():
    with pytest.raises(ValueError):
        limit_study(3, (0.7,))


def test_limit_check():
    assert limit_check(3).passed
