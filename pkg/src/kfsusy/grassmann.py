"""Braided nilpotent (generalized Grassmann) variables.

Each generator satisfies ``g**k = 0``. An unbarred generator ``theta`` and a
barred one ``thetabar`` obey ``theta thetabar = q**(1/2) thetabar theta``;
generators of the same kind commute. Elements are stored as dense
coefficient vectors over normal-ordered monomials ``g_0**e_0 g_1**e_1 ...``.

The braiding is kept as a table of phase angles so that every reordering
factor is an exact integer multiple of ``pi/k`` before exponentiation.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .qnum import DEFAULT_TOL, Deformation, qnumber
from .reports import CheckReport

__all__ = ["GrassmannAlgebra", "GrassmannElement", "AlgebraMismatchError",
           "qderiv", "qderiv_bar", "integrate", "double_integrate", "verify_realization",
           "mixed_derivative_phase"]


class AlgebraMismatchError(ValueError):
    pass


class GrassmannAlgebra:
    """Generators ``(name, barred)`` in normal order, all nilpotent of order ``k``."""

    def __init__(self, k: int, generators: Sequence[tuple[str, bool]]):
        self.deformation = Deformation(k)
        self.k = k
        self.names = tuple(name for name, _ in generators)
        self.barred = tuple(bool(b) for _, b in generators)
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        g = len(self.names)
        self.ngen = g
        self.size = k**g
        # angle[i, j] (i < j): g_j g_i = exp(1j * angle[i, j]) g_i g_j
        angle = np.zeros((g, g))
        for i in range(g):
            for j in range(i + 1, g):
                if self.barred[i] != self.barred[j]:
                    # thetabar theta = q^(-1/2) theta thetabar
                    angle[i, j] = -math.pi / k if not self.barred[i] else math.pi / k
        self.angle = angle
        self.radix = k ** np.arange(g - 1, -1, -1)
        self.exps = np.array(np.unravel_index(np.arange(self.size), (k,) * g)).T.reshape(self.size, g)

    @classmethod
    def one_variable(cls, k: int) -> "GrassmannAlgebra":
        return cls(k, [("theta", False)])

    @classmethod
    def two_variable(cls, k: int) -> "GrassmannAlgebra":
        return cls(k, [("theta", False), ("thetabar", True)])

    @classmethod
    def four_variable(cls, k: int) -> "GrassmannAlgebra":
        return cls(k, [("theta", False), ("theta'", False), ("thetabar", True), ("thetabar'", True)])

    def __eq__(self, other):
        return (isinstance(other, GrassmannAlgebra) and self.k == other.k
                and self.names == other.names and self.barred == other.barred)

    def __hash__(self):
        return hash((self.k, self.names, self.barred))

    def __repr__(self):
        return f"GrassmannAlgebra(k={self.k}, generators={self.names})"

    def var_index(self, var) -> int:
        return var if isinstance(var, (int, np.integer)) else self.names.index(var)

    def braiding(self, i: int, j: int) -> complex:
        """``beta`` with ``g_j g_i = beta g_i g_j`` for ``i < j``."""
        return complex(np.exp(1j * self.angle[i, j]))

    def index(self, exps) -> int:
        return int(np.dot(exps, self.radix))

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, np.zeros(self.size, dtype=complex))

    def one(self) -> "GrassmannElement":
        return self.scalar(1)

    def scalar(self, c: complex) -> "GrassmannElement":
        v = np.zeros(self.size, dtype=complex)
        v[0] = c
        return GrassmannElement(self, v)

    def monomial(self, powers: dict | Sequence[int], coeff: complex = 1) -> "GrassmannElement":
        """Normal-ordered monomial, e.g. ``monomial({"theta": 2, "thetabar": 1})``."""
        if isinstance(powers, dict):
            exps = [0] * self.ngen
            for name, e in powers.items():
                exps[self.var_index(name)] = e
        else:
            exps = list(powers)
        if any(e >= self.k for e in exps):
            return self.zero()
        v = np.zeros(self.size, dtype=complex)
        v[self.index(exps)] = coeff
        return GrassmannElement(self, v)

    def gen(self, name) -> "GrassmannElement":
        return self.monomial({self.names[self.var_index(name)]: 1})

    def gens(self) -> tuple["GrassmannElement", ...]:
        return tuple(self.gen(i) for i in range(self.ngen))

    def left_mult_matrix(self, x: "GrassmannElement") -> np.ndarray:
        """Matrix of ``y -> x * y`` on the monomial basis."""
        cols = [(x * GrassmannElement(self, e)).coeffs for e in np.eye(self.size, dtype=complex)]
        return np.array(cols).T

    def linear_map_matrix(self, fn) -> np.ndarray:
        cols = [fn(GrassmannElement(self, e)).coeffs for e in np.eye(self.size, dtype=complex)]
        return np.array(cols).T


class GrassmannElement:
    __array_priority__ = 100

    def __init__(self, algebra: GrassmannAlgebra, coeffs):
        self.algebra = algebra
        self.coeffs = np.asarray(coeffs, dtype=complex)

    def _same(self, other: "GrassmannElement"):
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(f"{self.algebra} vs {other.algebra}")

    def one(self) -> "GrassmannElement":
        return self.algebra.one()

    def __add__(self, other):
        if isinstance(other, GrassmannElement):
            self._same(other)
            return GrassmannElement(self.algebra, self.coeffs + other.coeffs)
        if np.isscalar(other):
            return self + self.algebra.scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.algebra, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return multiply(self, other)
        if np.isscalar(other):
            return GrassmannElement(self.algebra, self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return GrassmannElement(self.algebra, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, scalar):
        return GrassmannElement(self.algebra, self.coeffs / scalar)

    def __pow__(self, n: int):
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def terms(self, tol: float = 1e-15) -> dict[tuple[int, ...], complex]:
        """Nonzero coefficients keyed by exponent tuple (generator order)."""
        nz = np.nonzero(np.abs(self.coeffs) > tol)[0]
        return {tuple(int(e) for e in self.algebra.exps[i]): complex(self.coeffs[i]) for i in nz}

    def coefficient(self, powers: dict | Sequence[int]) -> complex:
        if isinstance(powers, dict):
            exps = [0] * self.algebra.ngen
            for name, e in powers.items():
                exps[self.algebra.var_index(name)] = e
        else:
            exps = list(powers)
        return complex(self.coeffs[self.algebra.index(exps)])

    def scalar_part(self) -> complex:
        return complex(self.coeffs[0])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def lowest_degree(self, tol: float = 1e-12) -> int | None:
        nz = np.nonzero(np.abs(self.coeffs) > tol)[0]
        if not len(nz):
            return None
        return int(self.algebra.exps[nz].sum(axis=1).min())

    def __repr__(self):
        parts = []
        for exps, c in self.terms(1e-13).items():
            mono = " ".join(f"{n}^{e}" if e > 1 else n for n, e in zip(self.algebra.names, exps) if e)
            parts.append(f"({c.real:.6g}{c.imag:+.6g}j){(' ' + mono) if mono else ''}")
        return " + ".join(parts) if parts else "0"


def multiply(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    """Braided product: concatenate, then reorder ``y``'s generators left past ``x``'s."""
    x._same(y)
    alg = x.algebra
    out = np.zeros(alg.size, dtype=complex)
    nx = np.nonzero(x.coeffs)[0]
    ny = np.nonzero(y.coeffs)[0]
    if not len(nx) or not len(ny):
        return GrassmannElement(alg, out)
    ey = alg.exps[ny]
    # g_j^a g_i^b = beta_ij^(ab) g_i^b g_j^a for i < j
    for i in nx:
        ex = alg.exps[i]
        total = ex + ey
        ok = np.all(total < alg.k, axis=1)
        if not ok.any():
            continue
        phase = np.exp(1j * (ey[ok] @ (alg.angle @ ex)))
        np.add.at(out, total[ok] @ alg.radix, x.coeffs[i] * y.coeffs[ny[ok]] * phase)
    return GrassmannElement(alg, out)


def qderiv(x: GrassmannElement, var) -> GrassmannElement:
    """Left q-derivative: bring ``var`` to the front, apply the difference quotient, restore order.

    On a monomial whose ``var`` exponent is ``a`` this is ``[a]_p`` times the
    monomial with ``a - 1``, times the reordering phase; ``p`` is ``q`` for an
    unbarred and ``qbar`` for a barred variable. On ``theta^a thetabar^b`` the
    barred derivative carries the phase ``q**(a/2)``.
    """
    alg = x.algebra
    v = alg.var_index(var)
    d = alg.deformation
    p = d.qbar if alg.barred[v] else d.q
    weights = np.array([qnumber(a, p) for a in range(alg.k)])
    out = np.zeros(alg.size, dtype=complex)
    for i in np.nonzero(x.coeffs)[0]:
        e = alg.exps[i].copy()
        a = e[v]
        if a == 0:
            continue
        angle = -np.dot(alg.angle[:v, v], e[:v])
        e[v] -= 1
        out[alg.index(e)] += x.coeffs[i] * weights[a] * np.exp(1j * angle)
    return GrassmannElement(alg, out)


def qderiv_bar(x: GrassmannElement, var="thetabar") -> GrassmannElement:
    """q-derivative in a barred variable: ``theta^a thetabar^b -> q^(a/2) [b]_qbar theta^a thetabar^(b-1)``."""
    if not x.algebra.barred[x.algebra.var_index(var)]:
        raise ValueError(f"{var!r} is not a barred generator")
    return qderiv(x, var)


def integrate(x: GrassmannElement, var, side: str = "left") -> GrassmannElement:
    """Coefficient of ``var**(k-1)`` after moving it to the ``side`` end of each monomial.

    ``int dtheta theta**n`` is 1 for ``n = k - 1`` and 0 otherwise. With the
    canonical order (unbarred before barred), ``int dtheta (...) dthetabar``
    picks up no reordering phase at all.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    alg = x.algebra
    v = alg.var_index(var)
    top = alg.k - 1
    out = np.zeros(alg.size, dtype=complex)
    for i in np.nonzero(x.coeffs)[0]:
        e = alg.exps[i].copy()
        if e[v] != top:
            continue
        if side == "left":
            angle = -top * np.dot(alg.angle[:v, v], e[:v])
        else:
            angle = -top * np.dot(alg.angle[v, v + 1:], e[v + 1:])
        e[v] = 0
        out[alg.index(e)] += x.coeffs[i] * np.exp(1j * angle)
    return GrassmannElement(alg, out)


def double_integrate(x: GrassmannElement, left_var, right_var) -> GrassmannElement:
    """``int int d(left_var) x d(right_var)``."""
    return integrate(integrate(x, left_var, "left"), right_var, "right")


def _realization_maps(k: int):
    alg = GrassmannAlgebra.two_variable(k)
    theta, thetabar = alg.gens()
    return (alg,
            alg.left_mult_matrix(theta),
            alg.left_mult_matrix(thetabar),
            alg.linear_map_matrix(lambda y: qderiv(y, "theta")),
            alg.linear_map_matrix(lambda y: qderiv(y, "thetabar")))


def verify_realization(k: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """The k-fermion relations realized by ``theta``, ``thetabar`` and their q-derivatives.

    All operators act on the ``k**2``-dimensional two-variable algebra:
    ``f_+ = theta``, ``f_- = d_theta``, ``f_-^+ = thetabar``, ``f_+^+ = d_thetabar``.
    """
    alg, th, thb, d, db = _realization_maps(k)
    q, qbar = alg.deformation.q, alg.deformation.qbar
    one = np.eye(alg.size)
    mx = lambda m: float(np.max(np.abs(m)))  # noqa: E731
    mp = np.linalg.matrix_power
    rep = CheckReport(f"grassmann k={k}")
    rep.expect_small("d_th th - q th d_th = 1", mx(d @ th - q * th @ d - one), tol)
    rep.expect_small("(d_th)^k = 0", mx(mp(d, k)), tol)
    rep.expect_small("th^k = 0", mx(mp(th, k)), tol)
    rep.expect_small("d_thb thb - qbar thb d_thb = 1", mx(db @ thb - qbar * thb @ db - one), tol)
    rep.expect_small("(d_thb)^k = 0", mx(mp(db, k)), tol)
    rep.expect_small("thb^k = 0", mx(mp(thb, k)), tol)
    rep.expect_small("d_th d_thb - q^(-1/2) d_thb d_th = 0",
                     mx(d @ db - alg.deformation.half_power(-1) * db @ d), tol)
    rep.expect_small("th thb - q^(1/2) thb th = 0",
                     mx(th @ thb - alg.deformation.half_power(+1) * thb @ th), tol)
    return rep


def mixed_derivative_phase(k: int) -> complex:
    """The number ``c`` with ``d_theta d_thetabar = c d_thetabar d_theta`` on the two-variable algebra."""
    _, _, _, d, db = _realization_maps(k)
    lhs, rhs = (d @ db).ravel(), (db @ d).ravel()
    return complex(np.vdot(rhs, lhs) / np.vdot(rhs, rhs))
