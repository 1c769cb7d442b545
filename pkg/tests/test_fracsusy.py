import numpy as np
import pytest

from kfsusy.fracsusy import (build_all, label_energy, spectrum, supercoherent_hamiltonian_check,
                             verify_susy, verify_weyl_heisenberg)
from kfsusy.operators import Operator, is_diagonal, max_abs
from kfsusy.reports import SpectrumReport


@pytest.mark.parametrize("k", range(2, 9))
def test_cyclic_F(k):
    ops = build_all(k, max(24, 2 * k + 2))
    assert max_abs(ops.F**k - Operator.identity(ops.fk.basis)) < 1e-10


@pytest.mark.parametrize("k", range(2, 8))
def test_suites(k):
    ops = build_all(k, max(24, 2 * k + 2))
    for rep in (verify_weyl_heisenberg(k, ops=ops), verify_susy(k, ops=ops)):
        assert rep.passed, rep.format_table()


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_hamiltonian_matches_label_oracle(k):
    ops = build_all(k, 12)
    assert is_diagonal(ops.H)
    diag = np.diag(ops.H.matrix).real
    for idx, (r, n) in enumerate(ops.basis.labels()):
        if r < ops.cutoff - 1:
            assert abs(diag[idx] - label_energy(r, n, k)) < 1e-10


@pytest.mark.parametrize("k", range(2, 9))
def test_degeneracy_pattern(k):
    rep = spectrum(k, max(24, 3 * k))
    degs = rep.degeneracies
    assert degs[:k] == list(range(1, k + 1))
    assert all(d == k for d in degs[k:])
    assert rep.spacing == k - 1


def test_k3_energies():
    assert spectrum(3, 24).head(4).energies == [-1.0, 1.0, 3.0, 5.0]


def test_k2_energies():
    rep = spectrum(2, 24).head(3)
    assert rep.energies == [0.0, 1.0, 2.0]
    assert rep.degeneracies == [1, 2, 2]


def test_spectrum_roundtrip():
    rep = spectrum(3, 16)
    assert SpectrumReport.from_dict(rep.to_dict()) == rep


def test_spectrum_uses_ops_cutoff():
    ops = build_all(3, 14)
    assert spectrum(3, 24, ops=ops).boson_cutoff == 14


def test_cutoff_validation():
    with pytest.raises(ValueError):
        build_all(4, 6)
    with pytest.raises(ValueError):
        build_all(1, 24)


def test_k2_supercoherent_under_H():
    rep = supercoherent_hamiltonian_check(0.7 + 0.4j)
    assert rep.passed, rep.format_table()
