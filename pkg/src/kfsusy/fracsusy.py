"""The Z_k-graded supersymmetric oscillator.

Built from a truncated boson ``b_+-`` and a k-fermion ``f_+-`` on the tensor
basis ``|r> (x) |n>``::

    F   = f_- + (f_+)^(k-1) / [k-1]_q!          (F^k = 1)
    X_- = b_- (x) F,     X_+ = b_+ (x) F^(k-1)
    K   = f_- f_+ - f_+ f_-                     (K|n> = q^n |n>)
    Pi_i = (1/k) sum_s q^(s i) K^s
    Q_- = X_- (1 - Pi_(k-1)),   Q_+ = X_+ (1 - Pi_0)

Every identity that moves the boson number is checked on the safe subspace
``r < R - (k + 1)``, where truncation cannot reach.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kfermion import BosonOperators, FkOperators, build_boson, build_fk
from .operators import (Basis, Operator, commutator, diagonal, is_diagonal,
                        max_abs, q_commutator, restrict_safe, tensor)
from .qnum import DEFAULT_TOL, qfactorial
from .reports import CheckReport, Level, SpectrumReport

__all__ = ["FracSusyOperators", "build_all", "verify_weyl_heisenberg", "verify_susy",
           "spectrum", "label_energy", "label_projector", "DiagonalityError",
           "supercoherent_hamiltonian_check"]

DEFAULT_CUTOFF = 24
GROUPING_TOL = 1e-8


class DiagonalityError(RuntimeError):
    """H is not diagonal in the number basis."""


@dataclass(frozen=True)
class FracSusyOperators:
    k: int
    cutoff: int
    fk: FkOperators
    bosons: BosonOperators
    F: Operator
    X_minus: Operator
    X_plus: Operator
    K: Operator
    M: Operator
    Pi: tuple[Operator, ...]
    Q_minus: Operator
    Q_plus: Operator
    H: Operator

    @property
    def basis(self) -> Basis:
        return self.H.basis

    @property
    def margin(self) -> int:
        return self.k + 1

    def identity(self) -> Operator:
        return Operator.identity(self.basis)

    def lift_fermion(self, op: Operator) -> Operator:
        return tensor(Operator.identity(self.bosons.N_b.basis), op)

    def lift_boson(self, op: Operator) -> Operator:
        return tensor(op, Operator.identity(self.fk.basis))


def cyclic_F(fk: FkOperators) -> Operator:
    k = fk.k
    return fk.f_minus + fk.f_plus ** (k - 1) / qfactorial(k - 1, fk.deformation.q)


def hamiltonian(X_minus: Operator, X_plus: Operator, Pi, k: int) -> Operator:
    one = Operator.identity(X_minus.basis)
    up_down = X_plus @ X_minus      # X_+ X_-
    down_up = X_minus @ X_plus      # X_- X_+
    H = down_up @ Pi[1]
    for ell in range(2, k):
        low = Operator.zeros(one.basis)
        for i in range(k - ell):
            low = low + Pi[i]
        H = H + (up_down - (ell - 1)) @ low
    for ell in range(2, k):
        H = H + ell * ((down_up + (ell - 1) / 2) @ Pi[ell])
    return H + up_down @ (one - Pi[k - 1])


def build_all(k: int, cutoff: int = DEFAULT_CUTOFF) -> FracSusyOperators:
    if int(k) != k or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if cutoff < k + 3:
        raise ValueError(f"boson cutoff must be >= k + 3 = {k + 3}, got {cutoff}")
    fk = build_fk(k)
    bos = build_boson(cutoff)
    q = fk.deformation.q
    F = cyclic_F(fk)
    X_minus = tensor(bos.b_minus, F)
    X_plus = tensor(bos.b_plus, F ** (k - 1))
    K = tensor(Operator.identity(bos.N_b.basis), fk.klein())
    one = Operator.identity(K.basis)
    K_powers = [K**s for s in range(k)]
    Pi = tuple(sum((q ** (s * i) * K_powers[s] for s in range(1, k)), K_powers[0]) / k
               for i in range(k))
    Q_minus = X_minus @ (one - Pi[k - 1])
    Q_plus = X_plus @ (one - Pi[0])
    H = hamiltonian(X_minus, X_plus, Pi, k)
    return FracSusyOperators(k, cutoff, fk, bos, F, X_minus, X_plus, K, X_plus @ X_minus,
                             Pi, Q_minus, Q_plus, H)


def label_projector(ops: FracSusyOperators, i: int) -> Operator:
    """Independent projector: selects fermion number ``n = -i mod k`` by label arithmetic."""
    k = ops.k
    diag = [1.0 if (n + i) % k == 0 else 0.0 for r in range(ops.cutoff) for n in range(k)]
    return Operator(ops.basis, np.diag(diag))


def label_energy(r: int, n: int, k: int) -> float:
    """H on ``|r, n>`` evaluated term by term with scalars.

    ``X_+ X_- -> r``, ``X_- X_+ -> r + 1`` and ``Pi_i -> [n = -i mod k]``;
    uses no matrices, so it serves as an oracle for the diagonal of H.
    """
    pi = [1.0 if (n + i) % k == 0 else 0.0 for i in range(k)]
    e = (r + 1) * pi[1]
    for ell in range(2, k):
        e += (r - ell + 1) * sum(pi[: k - ell])
        e += ell * (r + 1 + (ell - 1) / 2) * pi[ell]
    return e + r * (1 - pi[k - 1])


def verify_weyl_heisenberg(k: int, cutoff: int = DEFAULT_CUTOFF, tol: float = DEFAULT_TOL,
                           ops: FracSusyOperators | None = None) -> CheckReport:
    ops = ops or build_all(k, cutoff)
    q, qbar = ops.fk.deformation.q, ops.fk.deformation.qbar
    one = ops.identity()
    safe = lambda A: max_abs(restrict_safe(A, ops.margin))  # noqa: E731
    Xm, Xp, K, M = ops.X_minus, ops.X_plus, ops.K, ops.M
    rep = CheckReport(f"weyl-heisenberg k={k}")
    rep.expect_small("F^k = 1", max_abs(ops.F**k - Operator.identity(ops.fk.basis)), tol)
    rep.expect_small("X- X+ - X+ X- = 1", safe(commutator(Xm, Xp) - one), tol)
    rep.expect_small("K X+ - q X+ K = 0", safe(q_commutator(K, Xp, q)), tol)
    rep.expect_small("K X- - qbar X- K = 0", safe(q_commutator(K, Xm, qbar)), tol)
    rep.expect_small("K^k = 1", max_abs(K**k - one), tol)
    rep.expect_small("[M, X-] = -X-", safe(commutator(M, Xm) + Xm), tol)
    rep.expect_small("[M, X+] = +X+", safe(commutator(M, Xp) - Xp), tol)
    rep.expect_small("[M, K] = 0", max_abs(commutator(M, K)), tol)
    total = Operator.zeros(ops.basis)
    worst_idem = worst_oracle = 0.0
    for i, P in enumerate(ops.Pi):
        total = total + P
        worst_oracle = max(worst_oracle, max_abs(P - label_projector(ops, i)))
        for j, P2 in enumerate(ops.Pi):
            target = P if i == j else Operator.zeros(ops.basis)
            worst_idem = max(worst_idem, max_abs(P @ P2 - target))
    rep.expect_small("sum_i Pi_i = 1", max_abs(total - one), tol)
    rep.expect_small("Pi_i Pi_j = delta_ij Pi_i", worst_idem, tol)
    rep.expect_small("Pi_i selects n = -i mod k", worst_oracle, tol)
    return rep


def verify_susy(k: int, cutoff: int = DEFAULT_CUTOFF, tol: float = DEFAULT_TOL,
                ops: FracSusyOperators | None = None) -> CheckReport:
    ops = ops or build_all(k, cutoff)
    safe = lambda A: max_abs(restrict_safe(A, ops.margin))  # noqa: E731
    Qm, Qp, H = ops.Q_minus, ops.Q_plus, ops.H
    rep = CheckReport(f"susy k={k}")
    for name, Q in (("Q-", Qm), ("Q+", Qp)):
        # projector roundoff is amplified by up to |Q|^k
        rep.expect_small(f"({name})^k = 0", max_abs(Q**k) / max(1.0, max_abs(Q) ** k), tol)
        rep.expect_large(f"({name})^(k-1) != 0", max_abs(Q ** (k - 1)), 0.1)
    lhs = Operator.zeros(ops.basis)
    for j in range(k):
        lhs = lhs + Qm ** (k - 1 - j) @ Qp @ Qm**j
    rhs = Qm ** (k - 2) @ H
    # entries grow like r^(k/2) E; residuals are relative to the larger side once it exceeds 1
    rep.expect_small("sum_j Q-^(k-1-j) Q+ Q-^j = Q-^(k-2) H",
                     safe(lhs - rhs) / max(1.0, safe(rhs)), tol)
    for name, Q in (("Q-", Qm), ("Q+", Qp)):
        scale = max(1.0, safe(H @ Q))
        rep.expect_small(f"[H, {name}] = 0", safe(commutator(H, Q)) / scale, tol)
    rep.expect_true("H diagonal", is_diagonal(H, tol), max_abs(H.matrix - np.diag(np.diag(H.matrix))), tol)
    return rep


def spectrum(k: int, cutoff: int = DEFAULT_CUTOFF, tol: float = DEFAULT_TOL,
             ops: FracSusyOperators | None = None) -> SpectrumReport:
    """Levels of H read off its diagonal.

    Labels with ``r >= R - k`` are dropped as truncation-contaminated, and so
    is every level at or above the lowest energy among the dropped labels,
    since such a level may be missing members.
    """
    ops = ops or build_all(k, cutoff)
    cutoff = ops.cutoff
    H = ops.H
    if not is_diagonal(H, tol):
        raise DiagonalityError(f"H is not diagonal for k={k}; F^k = 1 structure violated")
    diag = np.array(diagonal(H))
    if np.max(np.abs(diag.imag)) > tol:
        raise DiagonalityError("H has complex diagonal entries")
    energies = diag.real.reshape(cutoff, k)
    keep = energies[: cutoff - k].ravel()
    ceiling = energies[cutoff - k].min()
    keep = np.sort(keep[keep < ceiling - GROUPING_TOL])
    levels: list[Level] = []
    for e in keep:
        if levels and abs(e - levels[-1].energy) <= GROUPING_TOL:
            levels[-1].degeneracy += 1
        else:
            levels.append(Level(float(e), 1))
    gaps = np.diff([lv.energy for lv in levels])
    spacing = None
    if len(gaps) and np.max(np.abs(gaps - gaps[0])) <= GROUPING_TOL:
        spacing = float(round(gaps[0], 9))
    for lv in levels:
        lv.energy = float(round(lv.energy, 9)) + 0.0
    return SpectrumReport(k, cutoff, levels, spacing, int(diag.size - keep.size))


def supercoherent_hamiltonian_check(z: complex, cutoff: int = DEFAULT_CUTOFF,
                                    tol: float = DEFAULT_TOL) -> CheckReport:
    """For k = 2: ``H |z, theta) = (z d_z + theta d_theta) |z, theta)``.

    H acts on ``|z, theta)`` as the Euler operator in ``(z, theta)``, so its
    flow only rescales ``z`` and ``theta``: the state stays coherent.
    """
    from .coherent import fractional_supercoherent

    ops = build_all(2, cutoff)
    state = fractional_supercoherent(z, 2, cutoff)
    lhs = ops.H @ state
    weights = np.array([r + n for r in range(cutoff) for n in range(2)], dtype=float)
    rhs = weights[:, None] * state.coeffs
    rep = CheckReport("k=2 supercoherent state under H")
    diff = (lhs.coeffs - rhs)[: (cutoff - 1) * 2]
    rep.expect_small("H|z,th) = (z d_z + th d_th)|z,th)", float(np.max(np.abs(diff))), tol)
    return rep
