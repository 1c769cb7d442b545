"""k-fermionic coherent states, fractional supercoherent states and Vourdas states.

Coherent states here are Fock vectors whose coefficients live in a braided
Grassmann algebra. Grassmann scalars commute with every Fock operator:
operators act on the label index only.
"""
from __future__ import annotations

import math

import numpy as np

from .grassmann import GrassmannAlgebra, GrassmannElement, double_integrate
from .kfermion import build_boson, build_fk
from .operators import Basis, Operator, StateVector, tensor
from .qnum import DEFAULT_TOL, Deformation, qexp, qfactorial, root_qfactorial
from .reports import CheckReport

__all__ = [
    "TailTooLargeError", "GrassmannState", "coherent_ket", "coherent_bra",
    "ket_theta", "ket_thetabar", "bra_theta", "bra_thetabar", "overlap",
    "check_eigenstate", "overlap_check", "mu_weight", "resolution_matrix", "overcompleteness_check",
    "coherence_factor", "fractional_supercoherent", "displacement_apply",
    "eigenstate_residual", "vourdas_state", "vourdas_decomposition_check",
    "coherent_suite",
]

TAIL_LIMIT = 1e-12


class TailTooLargeError(ValueError):
    """The boson cutoff is too small for the requested coherent amplitude."""


class GrassmannState:
    """Fock vector (or dual vector) with one Grassmann coefficient per basis label.

    ``coeffs`` has shape ``(basis.size, algebra.size)``.
    """

    def __init__(self, basis: Basis, algebra: GrassmannAlgebra, coeffs, dual: bool = False):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (basis.size, algebra.size):
            raise ValueError(f"coefficient table {coeffs.shape} does not fit {basis}, {algebra}")
        self.basis = basis
        self.algebra = algebra
        self.coeffs = coeffs
        self.dual = dual

    def __getitem__(self, label) -> GrassmannElement:
        return GrassmannElement(self.algebra, self.coeffs[self.basis.index(label)])

    def __rmatmul__(self, op: Operator) -> "GrassmannState":
        if self.dual:
            raise TypeError("operators act on dual states from the right: bra @ op")
        if op.basis != self.basis:
            raise ValueError("basis mismatch")
        return GrassmannState(self.basis, self.algebra, op.matrix @ self.coeffs)

    def __matmul__(self, op: Operator) -> "GrassmannState":
        if not self.dual:
            return NotImplemented
        if op.basis != self.basis:
            raise ValueError("basis mismatch")
        return GrassmannState(self.basis, self.algebra, op.matrix.T @ self.coeffs, dual=True)

    def __rmul__(self, x):
        """Left multiplication of every coefficient by a Grassmann element or a number."""
        if isinstance(x, GrassmannElement):
            lm = self.algebra.left_mult_matrix(x)
            return GrassmannState(self.basis, self.algebra, self.coeffs @ lm.T, self.dual)
        if np.isscalar(x):
            return GrassmannState(self.basis, self.algebra, x * self.coeffs, self.dual)
        return NotImplemented

    def __sub__(self, other: "GrassmannState") -> "GrassmannState":
        return GrassmannState(self.basis, self.algebra, self.coeffs - other.coeffs, self.dual)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0


def _coherent_coeffs(algebra: GrassmannAlgebra, var) -> np.ndarray:
    """Rows ``var**n / ([n]_p!)**(1/2)``, ``p = q`` for unbarred and ``qbar`` for barred ``var``."""
    v = algebra.var_index(var)
    d = algebra.deformation
    p = d.qbar if algebra.barred[v] else d.q
    k = algebra.k
    rows = np.zeros((k, algebra.size), dtype=complex)
    for n in range(k):
        exps = [0] * algebra.ngen
        exps[v] = n
        rows[n, algebra.index(exps)] = 1 / root_qfactorial(n, p)
    return rows


def coherent_ket(algebra: GrassmannAlgebra, var) -> GrassmannState:
    """``sum_n var**n / ([n]_p!)**(1/2) |n>``."""
    return GrassmannState(Basis.fermion(algebra.k), algebra, _coherent_coeffs(algebra, var))


def coherent_bra(algebra: GrassmannAlgebra, var) -> GrassmannState:
    """``sum_n <n| var**n / ([n]_p!)**(1/2)``; the bra ``(theta|`` is built on ``thetabar``."""
    return GrassmannState(Basis.fermion(algebra.k), algebra, _coherent_coeffs(algebra, var), dual=True)


def _alg(k, algebra):
    return algebra if algebra is not None else GrassmannAlgebra.two_variable(k)


def ket_theta(k: int, algebra: GrassmannAlgebra | None = None, prime: str = "") -> GrassmannState:
    return coherent_ket(_alg(k, algebra), "theta" + prime)


def ket_thetabar(k: int, algebra: GrassmannAlgebra | None = None, prime: str = "") -> GrassmannState:
    return coherent_ket(_alg(k, algebra), "thetabar" + prime)


def bra_theta(k: int, algebra: GrassmannAlgebra | None = None, prime: str = "") -> GrassmannState:
    return coherent_bra(_alg(k, algebra), "thetabar" + prime)


def bra_thetabar(k: int, algebra: GrassmannAlgebra | None = None, prime: str = "") -> GrassmannState:
    return coherent_bra(_alg(k, algebra), "theta" + prime)


def overlap(bra: GrassmannState, ket: GrassmannState) -> GrassmannElement:
    """``sum_n bra_n * ket_n`` with the bra coefficient on the left."""
    if not bra.dual or ket.dual:
        raise ValueError("overlap expects (dual state, state)")
    if bra.basis != ket.basis or bra.algebra != ket.algebra:
        raise ValueError("bra and ket live on different spaces")
    alg = bra.algebra
    total = alg.zero()
    for n in range(bra.basis.size):
        total = total + GrassmannElement(alg, bra.coeffs[n]) * GrassmannElement(alg, ket.coeffs[n])
    return total


def check_eigenstate(k: int, tol: float = DEFAULT_TOL) -> CheckReport:
    fk = build_fk(k)
    alg = GrassmannAlgebra.two_variable(k)
    theta, thetabar = alg.gens()
    ket, ketb = ket_theta(k, alg), ket_thetabar(k, alg)
    bra, brab = bra_theta(k, alg), bra_thetabar(k, alg)
    rep = CheckReport(f"coherent eigenstates k={k}")
    rep.expect_small("f- |th) = th |th)", (fk.f_minus @ ket - theta * ket).max_abs(), tol)
    rep.expect_small("f++ |thb) = thb |thb)", (fk.f_plus_plus @ ketb - thetabar * ketb).max_abs(), tol)
    rep.expect_small("(th| f-+ = thb (th|", ((bra @ fk.f_minus_plus) - thetabar * bra).max_abs(), tol)
    rep.expect_small("(thb| f+ = th (thb|", ((brab @ fk.f_plus) - theta * brab).max_abs(), tol)
    return rep


def overlap_check(k: int, tol: float = 1e-12) -> CheckReport:
    """Overlaps of coherent states against deformed exponentials on the four-variable algebra."""
    alg = GrassmannAlgebra.four_variable(k)
    d = alg.deformation
    th, thp, thb, thbp = alg.gens()
    rep = CheckReport(f"overlaps k={k}")
    # (theta'|theta) = e_q(thetabar' theta)
    lhs = overlap(bra_theta(k, alg, "'"), ket_theta(k, alg))
    rep.expect_small("(th'|th) = e_q(thb' th)", (lhs - qexp(thbp * th, d.q, k)).max_abs(), tol)
    # (thetabar|thetabar') = e_qbar(theta thetabar')
    lhs = overlap(bra_thetabar(k, alg), ket_thetabar(k, alg, "'"))
    rep.expect_small("(thb|thb') = e_qbar(th thb')", (lhs - qexp(th * thbp, d.qbar, k)).max_abs(), tol)
    # (thetabar'|thetabar) = e_qbar(theta' thetabar)
    lhs = overlap(bra_thetabar(k, alg, "'"), ket_thetabar(k, alg))
    rep.expect_small("(thb'|thb) = e_qbar(th' thb)", (lhs - qexp(thp * thb, d.qbar, k)).max_abs(), tol)
    return rep


def mu_weight(algebra: GrassmannAlgebra, first, second) -> GrassmannElement:
    """``sum_n ([n]_q! [n]_qbar!)**(1/2) first**(k-1-n) second**(k-1-n)``."""
    k = algebra.k
    d = algebra.deformation
    a, b = algebra.gen(first), algebra.gen(second)
    total = algebra.zero()
    for n in range(k):
        w = abs(root_qfactorial(n, d.q) * root_qfactorial(n, d.qbar))
        total = total + w * (a ** (k - 1 - n)) * (b ** (k - 1 - n))
    return total


def resolution_matrix(k: int, barred_first: bool = False) -> np.ndarray:
    """``int int d(x) |x) mu(x, y) (x| d(y)`` entrywise; ``x = theta`` unless ``barred_first``."""
    alg = GrassmannAlgebra.two_variable(k)
    x, y = ("thetabar", "theta") if barred_first else ("theta", "thetabar")
    ket, bra = coherent_ket(alg, x), coherent_bra(alg, y)
    mu = mu_weight(alg, x, y)
    out = np.zeros((k, k), dtype=complex)
    for m in range(k):
        left = GrassmannElement(alg, ket.coeffs[m]) * mu
        for n in range(k):
            entry = left * GrassmannElement(alg, bra.coeffs[n])
            out[m, n] = double_integrate(entry, x, y).scalar_part()
    return out


def overcompleteness_check(k: int, tol: float = DEFAULT_TOL) -> CheckReport:
    rep = CheckReport(f"resolution of identity k={k}")
    eye = np.eye(k)
    rep.expect_small("int dth |th) mu (th| dthb = 1",
                     np.max(np.abs(resolution_matrix(k) - eye)), tol)
    rep.expect_small("int dthb |thb) mu (thb| dth = 1",
                     np.max(np.abs(resolution_matrix(k, barred_first=True) - eye)), tol)
    return rep


def coherence_numerator_denominator(k: int, m: int):
    fk = build_fk(k)
    alg = GrassmannAlgebra.two_variable(k)
    ket, bra = ket_theta(k, alg), bra_theta(k, alg)
    num = overlap(bra, (fk.f_minus_plus ** m) @ ((fk.f_minus ** m) @ ket))
    den = overlap(bra, (fk.f_minus_plus @ fk.f_minus) @ ket) ** m
    return num, den


def coherence_factor(k: int, m: int) -> float:
    """``|g^(m)|`` from the ratio of the lowest-degree coefficients of numerator and denominator.

    Grassmann division is undefined, so the ratio is taken on the leading
    monomial ``theta^m thetabar^m`` common to both. A vanishing numerator gives 0.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    num, den = coherence_numerator_denominator(k, m)
    if not np.any(num.coeffs):
        return 0.0
    lead = {"theta": m, "thetabar": m}
    if num.lowest_degree() != 2 * m or den.lowest_degree() != 2 * m:
        raise ValueError(f"numerator/denominator not proportional at lowest degree: {num!r} vs {den!r}")
    for other in (num, den):
        low = {e for e in other.terms(1e-12) if sum(e) == 2 * m}
        if low != {(m, m)}:
            raise ValueError(f"unexpected lowest-degree monomials {sorted(low)} for m={m}")
    return abs(num.coefficient(lead) / den.coefficient(lead))


def _tail(z: complex, cutoff: int) -> float:
    return abs(z) ** cutoff / math.sqrt(math.factorial(cutoff))


def _check_tail(z: complex, cutoff: int) -> None:
    if _tail(z, cutoff) >= TAIL_LIMIT:
        raise TailTooLargeError(
            f"|z|^R/sqrt(R!) = {_tail(z, cutoff):.3g} for z={z}, R={cutoff}; raise the boson cutoff")


def boson_coherent(z: complex, cutoff: int) -> np.ndarray:
    """Truncated ``sum_{r<R} z**r / sqrt(r!) |r>``."""
    out = np.zeros(cutoff, dtype=complex)
    c = 1 + 0j
    for r in range(cutoff):
        out[r] = c
        c *= z / math.sqrt(r + 1)
    return out


def fractional_supercoherent(z: complex, k: int, cutoff: int) -> GrassmannState:
    """``|z, theta) = |z) (x) |theta)`` on the truncated tensor basis, one-variable algebra."""
    _check_tail(z, cutoff)
    alg = GrassmannAlgebra.one_variable(k)
    fermion = _coherent_coeffs(alg, "theta")
    table = np.kron(boson_coherent(z, cutoff)[:, None], fermion)
    return GrassmannState(Basis.tensor(cutoff, k), alg, table)


def displacement_apply(z: complex, k: int, cutoff: int) -> GrassmannState:
    """``exp(z b_+) e_q(theta f_+) |0> (x) |0>``.

    ``(theta f_+)**n = theta**n (f_+)**n`` since theta commutes with Fock
    operators; ``b_+`` is nilpotent on the truncated space, so ``exp`` is a finite sum.
    """
    _check_tail(z, cutoff)
    fk, bos = build_fk(k), build_boson(cutoff)
    alg = GrassmannAlgebra.one_variable(k)
    q = fk.deformation.q
    basis = Basis.tensor(cutoff, k)
    vac = np.zeros((basis.size, alg.size), dtype=complex)
    vac[0, 0] = 1
    state = GrassmannState(basis, alg, vac)

    ib = Operator.identity(bos.N_b.basis)
    fplus = tensor(ib, fk.f_plus)
    theta = alg.gen("theta")
    fermionic = 0 * state.coeffs
    power = state
    for n in range(k):
        fermionic = fermionic + power.coeffs / qfactorial(n, q)
        power = theta * (fplus @ power)

    bplus = tensor(bos.b_plus, Operator.identity(fk.basis))
    acc = GrassmannState(basis, alg, fermionic)
    total = acc.coeffs.copy()
    for r in range(1, cutoff):
        acc = (z / r) * (bplus @ acc)
        total += acc.coeffs
    return GrassmannState(basis, alg, total)


def eigenstate_residual(z: complex, k: int, cutoff: int) -> tuple[float, float]:
    """``b_- f_- |z, theta) - z theta |z, theta)`` max-norm, and the tail bound ``|z|^R / sqrt((R-1)!)``."""
    fk, bos = build_fk(k), build_boson(cutoff)
    state = fractional_supercoherent(z, k, cutoff)
    theta = state.algebra.gen("theta")
    lhs = tensor(bos.b_minus, fk.f_minus) @ state
    res = (lhs - (z * theta) * state).max_abs()
    return res, abs(z) ** cutoff / math.sqrt(math.factorial(cutoff - 1))


def vourdas_state(z: complex, k: int, s: int, cutoff: int) -> StateVector:
    """``|z, k, s) = sum_{r<R} z**(k r) / sqrt(r!) |k r + s>`` on the first ``R k`` oscillator levels."""
    if not 0 <= s < k:
        raise ValueError("sector s must lie in 0..k-1")
    _check_tail(z**k, cutoff)
    out = np.zeros(cutoff * k, dtype=complex)
    out[s::k] = boson_coherent(z**k, cutoff)
    return StateVector(Basis.boson(cutoff * k), out)


def vourdas_decomposition_check(z: complex, k: int, cutoff: int, tol: float = 1e-12) -> CheckReport:
    """``|z^k, theta) = sum_s theta^s / ([s]_q!)^(1/2) |z, k, s)`` under ``|k r + s> <-> |r> (x) |s>``."""
    sc = fractional_supercoherent(z**k, k, cutoff)
    alg = sc.algebra
    q = Deformation(k).q
    expansion = np.zeros_like(sc.coeffs)
    for s in range(k):
        coeff = alg.monomial([s]) / root_qfactorial(s, q)
        # the index maps coincide: tensor label (r, s) sits at k r + s
        expansion += np.outer(vourdas_state(z, k, s, cutoff).coeffs, coeff.coeffs)
    rep = CheckReport(f"vourdas k={k}")
    rep.expect_small("|z^k,th) = sum_s th^s/([s]!)^(1/2) |z,k,s)",
                     np.max(np.abs(sc.coeffs - expansion)), tol)
    for s in range(k):
        v = vourdas_state(z, k, s, cutoff).coeffs
        off = np.delete(v, np.arange(s, v.size, k))
        rep.expect_small(f"|z,k,{s}) supported on k r + {s}", np.max(np.abs(off)) if off.size else 0.0, tol)
    return rep


def coherent_suite(k: int, z: complex = 0.7 + 0.4j, cutoff: int = 24,
                   tol: float = DEFAULT_TOL) -> CheckReport:
    """Every coherent-state identity at one ``k``; raises :class:`TailTooLargeError` first if needed."""
    _check_tail(z, cutoff)
    _check_tail(z**k, cutoff)
    rep = CheckReport(f"coherent k={k}")
    rep.extend(check_eigenstate(k, tol))
    rep.extend(overlap_check(k, min(tol, 1e-12)))
    rep.extend(overcompleteness_check(k, tol))
    for m in range(1, k + 2):
        g = coherence_factor(k, m)
        if m <= k - 1:
            rep.expect_small(f"|g^({m})| = 1", abs(g - 1), tol)
        else:
            rep.expect_true(f"|g^({m})| = 0", g == 0.0, g, 0.0)
    disp = displacement_apply(z, k, cutoff)
    sc = fractional_supercoherent(z, k, cutoff)
    rep.expect_small("D_q(z,th)|0,0> = |z,th)", (disp - sc).max_abs(), tol)
    res, bound = eigenstate_residual(z, k, cutoff)
    rep.expect_small("b- f- |z,th) = z th |z,th)", res, bound * (1 + 1e-9) + 1e-15)
    rep.extend(vourdas_decomposition_check(z, k, cutoff, tol))
    return rep
