"""Generic-Q deformed oscillators and the Q -> q split into a boson and a k-fermion.

The ``R k``-dimensional Q-uon space is identified with the tensor basis
through ``|k r + s> <-> |r> (x) |s>``, which is exactly the r-major label
order of :class:`~kfsusy.operators.Basis`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .kfermion import build_fk
from .operators import (Basis, Operator, StateVector, commutator, max_abs,
                        q_commutator, restrict_safe, tensor)
from .qnum import DEFAULT_TOL, principal_sqrt, qnumber, root_qfactorial
from .reports import CheckReport

__all__ = ["QuonOperators", "build_quon", "quon_coherent", "quon_path",
           "LimitRow", "LimitReport", "limit_study"]

DEFAULT_EPSILONS = (1e-2, 1e-3, 1e-4)
SAFE_MARGIN = 2


@dataclass(frozen=True)
class QuonOperators:
    Q: complex
    a_minus: Operator
    a_plus: Operator

    def relation_residual(self, margin: int = 1) -> float:
        """``a_- a_+ - Q a_+ a_- - 1`` away from the top level (tensor bases only)."""
        rel = q_commutator(self.a_minus, self.a_plus, self.Q) - Operator.identity(self.a_minus.basis)
        if self.a_minus.basis.kind == "tensor":
            rel = restrict_safe(rel, margin)
            return max_abs(rel)
        return max_abs(rel.matrix[:-1, :-1])


def build_quon(Q: complex, dim: int | Basis) -> QuonOperators:
    """Truncated Q-uon ladder: ``a_-|n> = ([n]_Q)^(1/2) |n-1>``, ``a_+|n> = ([n+1]_Q)^(1/2) |n+1>``."""
    basis = dim if isinstance(dim, Basis) else Basis.boson(dim)
    if basis.size < 2:
        raise ValueError("dim must be >= 2")
    lower = np.zeros((basis.size, basis.size), dtype=complex)
    for n in range(1, basis.size):
        lower[n - 1, n] = principal_sqrt(qnumber(n, Q))
    return QuonOperators(complex(Q), Operator(basis, lower), Operator(basis, lower.T))


def quon_coherent(Z: complex, Q: complex, dim: int, tail: float = 1e-12) -> StateVector:
    """``sum_{n<dim} Z**n / ([n]_Q!)^(1/2) |n>``; raises if the last kept term exceeds ``tail``."""
    coeffs = np.array([Z**n / root_qfactorial(n, Q) for n in range(dim)], dtype=complex)
    if abs(coeffs[-1]) >= tail:
        from .coherent import TailTooLargeError
        raise TailTooLargeError(f"last coefficient {abs(coeffs[-1]):.3g} >= {tail:g}")
    return StateVector(Basis.boson(dim), coeffs)


def quon_path(k: int, eps: float) -> complex:
    """``exp(2 pi i (1 - eps) / k)``: approach to the root of unity along the unit circle."""
    return cmath.exp(2j * math.pi * (1 - eps) / k)


@dataclass
class LimitRow:
    eps: float
    boson_deviation: float
    mixed_deviation: float
    fermion_deviation: float
    cauchy: float | None = None


@dataclass
class LimitReport:
    k: int
    boson_cutoff: int
    rows: list[LimitRow] = field(default_factory=list)

    def monotone(self, column: str) -> bool:
        vals = [getattr(r, column) for r in self.rows if getattr(r, column) is not None]
        return all(b < a for a, b in zip(vals, vals[1:]))

    def to_check_report(self, tol_boson: float | None = None) -> CheckReport:
        rep = CheckReport(f"quon limit k={self.k}")
        for col in ("boson_deviation", "mixed_deviation", "fermion_deviation", "cauchy"):
            vals = [getattr(r, col) for r in self.rows]
            rep.expect_true(f"{col} decreasing as eps -> 0", self.monotone(col),
                            max(v for v in vals if v is not None) if any(v is not None for v in vals) else 0.0)
        if tol_boson is not None and self.rows:
            rep.expect_small("[b-, b+] - 1 at smallest eps", self.rows[-1].boson_deviation, tol_boson)
        return rep

    def format_table(self) -> str:
        lines = [f"k={self.k}  R={self.boson_cutoff}",
                 f"{'eps':>10} {'[b-,b+]-1':>12} {'[b,f]':>12} {'f-relation':>12} {'cauchy':>12}"]
        for r in self.rows:
            cauchy = "" if r.cauchy is None else f"{r.cauchy:.3e}"
            lines.append(f"{r.eps:>10.1e} {r.boson_deviation:>12.3e} {r.mixed_deviation:>12.3e} "
                         f"{r.fermion_deviation:>12.3e} {cauchy:>12}")
        return "\n".join(lines)


def _limit_bosons(k: int, eps: float, cutoff: int):
    Q = quon_path(k, eps)
    quon = build_quon(Q, Basis.tensor(cutoff, k))
    norm = root_qfactorial(k, Q)
    return Q, quon.a_minus ** k / norm, quon.a_plus ** k / norm


def limit_study(k: int, epsilons=DEFAULT_EPSILONS, cutoff: int = 6) -> LimitReport:
    """Deviation table for ``b_+- = (a_+-)^k / ([k]_Q!)^(1/2)`` as ``Q -> q``.

    Columns: ``[b_-, b_+] - 1`` on the safe subspace ``r < R - 2``; the largest
    commutator of ``b_+-`` with the blockwise-embedded ``f_+-``; the deviation of
    ``f_- f_+ - Q f_+ f_- - 1``; and the entrywise change of ``b_+-`` from the
    previous (larger) epsilon. Epsilons are processed in descending order.
    """
    eps_list = sorted({float(e) for e in epsilons}, reverse=True)
    for e in eps_list:
        if not 0 < e < 0.5:
            raise ValueError(f"epsilon must lie in (0, 0.5), got {e}")
    fk = build_fk(k)
    ib = Operator.identity(Basis.boson(cutoff))
    f_minus, f_plus = tensor(ib, fk.f_minus), tensor(ib, fk.f_plus)
    report = LimitReport(k, cutoff)
    previous = None
    for eps in eps_list:
        Q, b_minus, b_plus = _limit_bosons(k, eps, cutoff)
        boson = restrict_safe(commutator(b_minus, b_plus), SAFE_MARGIN) - 1
        mixed = max(max_abs(restrict_safe(commutator(b, f), SAFE_MARGIN))
                    for b in (b_minus, b_plus) for f in (f_minus, f_plus))
        fermion = q_commutator(fk.f_minus, fk.f_plus, Q) - Operator.identity(fk.basis)
        cauchy = None
        if previous is not None:
            cauchy = max(max_abs(restrict_safe(b_minus - previous[0], SAFE_MARGIN)),
                         max_abs(restrict_safe(b_plus - previous[1], SAFE_MARGIN)))
        report.rows.append(LimitRow(eps, max_abs(boson), mixed, max_abs(fermion), cauchy))
        previous = (b_minus, b_plus)
    return report


def limit_check(k: int, epsilons=DEFAULT_EPSILONS, cutoff: int = 6,
                tol: float = DEFAULT_TOL) -> CheckReport:
    return limit_study(k, epsilons, cutoff).to_check_report(tol_boson=1e-2)
