"""Dense complex operators over small labelled bases.

Three kinds of basis are used: the k-dimensional fermion basis ``|n>``, the
truncated boson basis ``|r>`` (cutoff R) and their tensor product with labels
``(r, n)`` enumerated r-major, so that ``(r, n)`` sits at index ``k*r + n``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Basis",
    "BasisMismatchError",
    "Operator",
    "StateVector",
    "q_commutator",
    "commutator",
    "tensor",
    "restrict_safe",
    "max_abs",
    "is_diagonal",
    "diagonal",
]


class BasisMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Basis:
    kind: str  # "fermion" | "boson" | "tensor"
    boson_cutoff: int = 0
    k: int = 0

    @classmethod
    def fermion(cls, k: int) -> "Basis":
        return cls("fermion", 0, k)

    @classmethod
    def boson(cls, cutoff: int) -> "Basis":
        return cls("boson", cutoff, 0)

    @classmethod
    def tensor(cls, cutoff: int, k: int) -> "Basis":
        return cls("tensor", cutoff, k)

    @property
    def size(self) -> int:
        if self.kind == "fermion":
            return self.k
        if self.kind == "boson":
            return self.boson_cutoff
        return self.boson_cutoff * self.k

    def labels(self) -> list:
        if self.kind == "fermion":
            return list(range(self.k))
        if self.kind == "boson":
            return list(range(self.boson_cutoff))
        return [(r, n) for r in range(self.boson_cutoff) for n in range(self.k)]

    def index(self, label) -> int:
        if self.kind == "tensor":
            r, n = label
            return r * self.k + n
        return int(label)


def _check_same(a: Basis, b: Basis) -> None:
    if a != b:
        raise BasisMismatchError(f"{a} vs {b}")


class Operator:
    """Square complex matrix bound to a :class:`Basis`.

    ``@`` composes, ``+``/``-`` add, ``*`` scales by a number, ``**`` takes
    non-negative integer powers.
    """

    __array_priority__ = 100

    def __init__(self, basis: Basis, matrix):
        matrix = np.array(matrix, dtype=complex)
        if matrix.shape != (basis.size, basis.size):
            raise ValueError(f"matrix shape {matrix.shape} does not fit {basis}")
        matrix.setflags(write=False)
        self.basis = basis
        self.matrix = matrix

    @classmethod
    def identity(cls, basis: Basis) -> "Operator":
        return cls(basis, np.eye(basis.size))

    @classmethod
    def zeros(cls, basis: Basis) -> "Operator":
        return cls(basis, np.zeros((basis.size, basis.size)))

    def __repr__(self):
        return f"Operator({self.basis}, max_abs={max_abs(self):.3g})"

    def __matmul__(self, other):
        if isinstance(other, Operator):
            _check_same(self.basis, other.basis)
            return Operator(self.basis, self.matrix @ other.matrix)
        if isinstance(other, StateVector):
            _check_same(self.basis, other.basis)
            return StateVector(self.basis, self.matrix @ other.coeffs)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Operator):
            _check_same(self.basis, other.basis)
            return Operator(self.basis, self.matrix + other.matrix)
        if np.isscalar(other):
            return Operator(self.basis, self.matrix + other * np.eye(self.basis.size))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return Operator(self.basis, -self.matrix)

    def __mul__(self, scalar):
        if np.isscalar(scalar):
            return Operator(self.basis, scalar * self.matrix)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / scalar)

    def __pow__(self, n: int):
        if int(n) != n or n < 0:
            raise ValueError("only non-negative integer powers")
        return Operator(self.basis, np.linalg.matrix_power(self.matrix, int(n)))

    def adjoint(self) -> "Operator":
        return Operator(self.basis, self.matrix.conj().T)

    @property
    def dag(self) -> "Operator":
        return self.adjoint()

    def element(self, row_label, col_label) -> complex:
        return complex(self.matrix[self.basis.index(row_label), self.basis.index(col_label)])


class StateVector:
    def __init__(self, basis: Basis, coeffs):
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.shape != (basis.size,):
            raise ValueError(f"coefficient shape {coeffs.shape} does not fit {basis}")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("state coefficients must be finite")
        self.basis = basis
        self.coeffs = coeffs

    def __getitem__(self, label) -> complex:
        return complex(self.coeffs[self.basis.index(label)])

    def __sub__(self, other: "StateVector") -> "StateVector":
        _check_same(self.basis, other.basis)
        return StateVector(self.basis, self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "StateVector":
        return StateVector(self.basis, scalar * self.coeffs)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


def q_commutator(a: Operator, b: Operator, c: complex = 1) -> Operator:
    """``a b - c b a``."""
    _check_same(a.basis, b.basis)
    return Operator(a.basis, a.matrix @ b.matrix - c * (b.matrix @ a.matrix))


def commutator(a: Operator, b: Operator) -> Operator:
    return q_commutator(a, b, 1)


def tensor(boson_op: Operator, fermion_op: Operator) -> Operator:
    """Kronecker product on the r-major pair basis."""
    if boson_op.basis.kind != "boson" or fermion_op.basis.kind != "fermion":
        raise BasisMismatchError("tensor expects (boson operator, fermion operator)")
    basis = Basis.tensor(boson_op.basis.boson_cutoff, fermion_op.basis.k)
    return Operator(basis, np.kron(boson_op.matrix, fermion_op.matrix))


def safe_indices(basis: Basis, boson_margin: int) -> np.ndarray:
    if basis.kind != "tensor":
        raise BasisMismatchError("restriction needs a tensor basis")
    if not 0 <= boson_margin < basis.boson_cutoff:
        raise ValueError(f"margin {boson_margin} must lie in [0, {basis.boson_cutoff})")
    keep = basis.boson_cutoff - boson_margin
    return np.arange(keep * basis.k)


def restrict_safe(a: Operator, boson_margin: int) -> Operator:
    """Compress ``a`` onto the labels with boson index ``r < R - boson_margin``."""
    idx = safe_indices(a.basis, boson_margin)
    basis = Basis.tensor(a.basis.boson_cutoff - boson_margin, a.basis.k)
    return Operator(basis, a.matrix[np.ix_(idx, idx)])


def max_abs(a) -> float:
    m = a.matrix if isinstance(a, Operator) else np.asarray(a)
    return float(np.max(np.abs(m))) if m.size else 0.0


def is_diagonal(a: Operator, tol: float = 1e-10) -> bool:
    off = a.matrix - np.diag(np.diag(a.matrix))
    return max_abs(off) < tol


def diagonal(a: Operator) -> list[complex]:
    return [complex(x) for x in np.diag(a.matrix)]
