"""Acceptance criteria, one test group per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary (see conftest.py).
"""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from kfsusy.coherent import (coherence_factor, displacement_apply, eigenstate_residual,
                             fractional_supercoherent, overcompleteness_check,
                             overlap_check, vourdas_decomposition_check)
from kfsusy.fracsusy import build_all, label_energy, spectrum, verify_susy, verify_weyl_heisenberg
from kfsusy.grassmann import GrassmannAlgebra, integrate, verify_realization
from kfsusy.kfermion import build_boson, build_fk, verify_fk_relations
from kfsusy.operators import Operator, max_abs, restrict_safe, tensor
from kfsusy.quon import limit_study

ALL_K = [2, 3, 4, 5, 6]


def _assert_report(rep):
    assert rep.passed, rep.format_table()


@pytest.mark.acceptance(1, "k-fermion relation suite, k=2..6, < 1e-10, < 1 s")
def test_c1_fk_relations():
    start = time.perf_counter()
    for k in ALL_K:
        _assert_report(verify_fk_relations(k, 1e-10))
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(2, "Grassmann realization, k=2..6, < 1e-10; Berezin values for k=2")
@pytest.mark.parametrize("k", ALL_K)
def test_c2_grassmann_realization(k):
    _assert_report(verify_realization(k, 1e-10))


@pytest.mark.acceptance(2, "Grassmann realization, k=2..6, < 1e-10; Berezin values for k=2")
def test_c2_berezin():
    alg = GrassmannAlgebra.one_variable(2)
    assert integrate(alg.one(), "theta").scalar_part() == 0
    assert integrate(alg.gen("theta"), "theta").scalar_part() == 1


@pytest.mark.acceptance(3, "overlaps equal deformed exponentials, k=2..5, < 1e-12")
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_c3_overlaps(k):
    _assert_report(overlap_check(k, 1e-12))


@pytest.mark.acceptance(4, "resolution of the identity, k=2..6, both orders, < 1e-10")
@pytest.mark.parametrize("k", ALL_K)
def test_c4_overcompleteness(k):
    _assert_report(overcompleteness_check(k, 1e-10))


@pytest.mark.acceptance(5, "|g^(m)| = 1 for m < k and exactly 0 for m >= k, k=2..5")
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_c5_coherence_factor(k):
    for m in range(1, k):
        assert abs(coherence_factor(k, m) - 1) < 1e-10
    for m in range(k, k + 3):
        assert coherence_factor(k, m) == 0.0


@pytest.mark.acceptance(6, "Q-uon limit: monotone deviations, boson deviation < 1e-2, < 5 s")
def test_c6_quon_limit():
    start = time.perf_counter()
    for k in (2, 3, 4):
        study = limit_study(k, (1e-2, 1e-3, 1e-4))
        for col in ("boson_deviation", "mixed_deviation", "fermion_deviation"):
            assert study.monotone(col), study.format_table()
        assert study.rows[-1].boson_deviation < 1e-2, study.format_table()
    assert time.perf_counter() - start < 5.0


@pytest.mark.acceptance(7, "Weyl-Heisenberg and SUSY suites, k=2..5, R=24, < 1e-10")
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_c7_susy_suites(k):
    ops = build_all(k, 24)
    assert ops.margin == k + 1
    _assert_report(verify_weyl_heisenberg(k, tol=1e-10, ops=ops))
    _assert_report(verify_susy(k, tol=1e-10, ops=ops))


@pytest.mark.acceptance(8, "spectra (1,2,2,2) and (1,2,3,3); k=2 matrix identities")
def test_c8_spectrum_k2():
    rep = spectrum(2, 24).head(4)
    assert rep.degeneracies == [1, 2, 2, 2]
    assert rep.spacing is not None
    assert np.allclose(np.diff(rep.energies), rep.spacing)


@pytest.mark.acceptance(8, "spectra (1,2,2,2) and (1,2,3,3); k=2 matrix identities")
def test_c8_spectrum_k3():
    rep = spectrum(3, 24).head(4)
    assert rep.degeneracies == [1, 2, 3, 3]
    oracle = sorted({label_energy(r, n, 3) for r in range(20) for n in range(3)})[:4]
    assert oracle == [-1.0, 1.0, 3.0, 5.0]
    assert np.max(np.abs(np.array(rep.energies) - oracle)) < 1e-8


@pytest.mark.acceptance(8, "spectra (1,2,2,2) and (1,2,3,3); k=2 matrix identities")
def test_c8_k2_matrix_identities():
    ops = build_all(2, 24)
    fk, bos = build_fk(2), build_boson(24)
    ib, i_f = Operator.identity(bos.N_b.basis), Operator.identity(fk.basis)
    fp, fm = tensor(ib, fk.f_plus), tensor(ib, fk.f_minus)
    bm, bp = tensor(bos.b_minus, i_f), tensor(bos.b_plus, i_f)
    assert max_abs(ops.Q_minus - fp @ bm) < 1e-12
    assert max_abs(ops.Q_plus - fm @ bp) < 1e-12
    # X_- X_+ is cut off at the top boson level, so H is compared on the safe subspace
    assert max_abs(restrict_safe(ops.H - (bp @ bm + fp @ fm), ops.margin)) < 1e-12


@pytest.mark.acceptance(9, "supercoherent states: displacement, eigenstate bound, Vourdas, k=2 form")
@pytest.mark.parametrize("k", ALL_K)
def test_c9_supercoherent(k):
    z, R = 0.7 + 0.4j, 24
    disp = displacement_apply(z, k, R)
    assert (disp - fractional_supercoherent(z, k, R)).max_abs() < 1e-12
    res, bound = eigenstate_residual(z, k, R)
    # the residual is the truncated top component, equal to the bound up to roundoff
    assert res <= bound * (1 + 1e-9)
    _assert_report(vourdas_decomposition_check(z, k, R, 1e-12))


@pytest.mark.acceptance(9, "supercoherent states: displacement, eigenstate bound, Vourdas, k=2 form")
def test_c9_k2_expansion():
    z, R = 0.7 + 0.4j, 24
    state = fractional_supercoherent(z, 2, R)
    boson = [z**r / math.sqrt(math.factorial(r)) for r in range(R)]
    for r in range(R):
        assert abs(state[(r, 0)].coefficient([0]) - boson[r]) < 1e-12
        assert abs(state[(r, 1)].coefficient([1]) - boson[r]) < 1e-12
        assert abs(state[(r, 0)].coefficient([1])) == 0
        assert abs(state[(r, 1)].coefficient([0])) == 0


@pytest.mark.acceptance(10, "`kfsusy verify --k all --suite all` exits 0 in < 30 s")
def test_c10_end_to_end():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "kfsusy", "verify", "--k", "all", "--suite", "all"],
                          capture_output=True, text=True, timeout=60)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert elapsed < 30
