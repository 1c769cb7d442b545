"""The k-dimensional representation of the k-fermion algebra and truncated bosons."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import (Basis, Operator, commutator, max_abs, q_commutator,
                        tensor)
from .qnum import DEFAULT_TOL, Deformation, principal_sqrt, qnumber
from .reports import CheckReport

# the representation shift; n + s -/+ 1/2 collapses to n and n + 1
S_SHIFT = 0.5


@dataclass(frozen=True)
class FkOperators:
    """``f_-``, ``f_+`` and their conjugates ``f_+^+ = f_+^dag``, ``f_-^+ = f_-^dag``, plus ``N``."""

    deformation: Deformation
    f_minus: Operator
    f_plus: Operator
    f_plus_plus: Operator
    f_minus_plus: Operator
    N: Operator

    @property
    def k(self) -> int:
        return self.deformation.k

    @property
    def basis(self) -> Basis:
        return self.N.basis

    def klein(self) -> Operator:
        """``K = f_- f_+ - f_+ f_-``, diagonal with entries ``q**n``."""
        return commutator(self.f_minus, self.f_plus)


@dataclass(frozen=True)
class BosonOperators:
    b_minus: Operator
    b_plus: Operator
    N_b: Operator

    @property
    def cutoff(self) -> int:
        return self.N_b.basis.boson_cutoff


def _ladder(k: int, p: complex, lower: bool) -> np.ndarray:
    m = np.zeros((k, k), dtype=complex)
    for n in range(k - 1):
        # <n| lower |n+1> = <n+1| raise |n> = ([n + s + 1/2]_p)^(1/2)
        m[n, n + 1] = principal_sqrt(qnumber(n + S_SHIFT + 0.5, p))
    return m if lower else m.T.copy()


def build_fk(k: int) -> FkOperators:
    if int(k) != k or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    d = Deformation(k)
    basis = Basis.fermion(k)
    return FkOperators(
        deformation=d,
        f_minus=Operator(basis, _ladder(k, d.q, lower=True)),
        f_plus=Operator(basis, _ladder(k, d.q, lower=False)),
        f_plus_plus=Operator(basis, _ladder(k, d.qbar, lower=True)),
        f_minus_plus=Operator(basis, _ladder(k, d.qbar, lower=False)),
        N=Operator(basis, np.diag(np.arange(k, dtype=float))),
    )


def build_boson(cutoff: int) -> BosonOperators:
    if int(cutoff) != cutoff or cutoff < 2:
        raise ValueError(f"boson cutoff must be an integer >= 2, got {cutoff!r}")
    basis = Basis.boson(cutoff)
    lower = np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), 1)
    return BosonOperators(
        b_minus=Operator(basis, lower),
        b_plus=Operator(basis, lower.T),
        N_b=Operator(basis, np.diag(np.arange(cutoff, dtype=float))),
    )


def verify_fk_relations(k: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """Residuals of every defining relation of the k-fermion algebra in the k-dim representation."""
    fk = build_fk(k)
    q, qbar = fk.deformation.q, fk.deformation.qbar
    fm, fp, fpp, fmp, N = fk.f_minus, fk.f_plus, fk.f_plus_plus, fk.f_minus_plus, fk.N
    one = Operator.identity(fk.basis)
    rep = CheckReport(f"algebra k={k}")

    # [f_-, f_+, N] type
    rep.expect_small("f- f+ - q f+ f- = 1", max_abs(q_commutator(fm, fp, q) - one), tol)
    rep.expect_small("[N, f-] = -f-", max_abs(commutator(N, fm) + fm), tol)
    rep.expect_small("[N, f+] = +f+", max_abs(commutator(N, fp) - fp), tol)
    rep.expect_small("(f-)^k = 0", max_abs(fm**k), tol)
    rep.expect_small("(f+)^k = 0", max_abs(fp**k), tol)
    # [f_+^+, f_-^+, N] type
    rep.expect_small("f++ f-+ - qbar f-+ f++ = 1", max_abs(q_commutator(fpp, fmp, qbar) - one), tol)
    rep.expect_small("[N, f++] = -f++", max_abs(commutator(N, fpp) + fpp), tol)
    rep.expect_small("[N, f-+] = +f-+", max_abs(commutator(N, fmp) - fmp), tol)
    rep.expect_small("(f++)^k = 0", max_abs(fpp**k), tol)
    rep.expect_small("(f-+)^k = 0", max_abs(fmp**k), tol)
    # mixed type
    rep.expect_small("f- f++ - q^(-1/2) f++ f- = 0",
                     max_abs(q_commutator(fm, fpp, fk.deformation.half_power(-1))), tol)
    rep.expect_small("f+ f-+ - q^(1/2) f-+ f+ = 0",
                     max_abs(q_commutator(fp, fmp, fk.deformation.half_power(+1))), tol)
    # hermitean conjugation
    rep.expect_small("f++ = (f+)^dag", max_abs(fpp - fp.adjoint()), tol)
    rep.expect_small("f-+ = (f-)^dag", max_abs(fmp - fm.adjoint()), tol)
    rep.expect_small("N = N^dag", max_abs(N - N.adjoint()), tol)
    # nilpotency index is exactly k
    for name, op in (("f-", fm), ("f+", fp), ("f++", fpp), ("f-+", fmp)):
        rep.expect_large(f"({name})^(k-1) != 0", max_abs(op ** (k - 1)), 0.1)
    return rep


def embed(b: BosonOperators, fk: FkOperators):
    """Boson and fermion ladder operators lifted to the tensor basis."""
    ib = Operator.identity(b.N_b.basis)
    i_f = Operator.identity(fk.basis)
    return {
        "b_minus": tensor(b.b_minus, i_f),
        "b_plus": tensor(b.b_plus, i_f),
        "f_minus": tensor(ib, fk.f_minus),
        "f_plus": tensor(ib, fk.f_plus),
    }
