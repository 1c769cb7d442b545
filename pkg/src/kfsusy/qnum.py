"""Deformed arithmetic at roots of unity.

q-numbers ``[x]_p = (1 - p**x) / (1 - p)``, q-factorials, truncated deformed
exponentials and the square-root branch used for every matrix element.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "DegenerateBaseError",
    "Deformation",
    "principal_sqrt",
    "qnumber",
    "qfactorial",
    "root_qfactorial",
    "qexp",
]

DEFAULT_TOL = 1e-10


class DegenerateBaseError(ValueError):
    """The deformation base is too close to 1 for ``(1 - p**x) / (1 - p)``."""


@dataclass(frozen=True)
class Deformation:
    """The primitive root of unity ``q = exp(2 pi i / k)`` and its conjugate."""

    k: int
    q: complex = field(init=False)
    qbar: complex = field(init=False)

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise ValueError(f"k must be an integer >= 2, got {self.k!r}")
        q = cmath.exp(2j * math.pi / self.k)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "qbar", q.conjugate())

    def half_power(self, sign: int = 1) -> complex:
        """``q**(sign/2)`` on the principal branch, i.e. ``exp(sign * i pi / k)``."""
        return cmath.exp(sign * 1j * math.pi / self.k)


def principal_sqrt(z: complex) -> complex:
    """Square root with argument in ``(-pi/2, pi/2]``.

    Unlike :func:`cmath.sqrt`, the result on the negative real axis does not
    depend on the sign of a zero imaginary part: ``principal_sqrt(-1) == 1j``.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        return complex(0.0, math.sqrt(-z.real))
    return cmath.sqrt(z)


def qnumber(x: float, p: complex) -> complex:
    """``[x]_p = (1 - p**x) / (1 - p)``; integer ``x`` is summed exactly as a geometric series."""
    p = complex(p)
    if abs(1 - p) <= 1e-12:
        raise DegenerateBaseError(f"|1 - p| must exceed 1e-12, got p={p}")
    if float(x).is_integer() and x >= 0:
        n = int(x)
        # 1 + p + ... + p**(n-1); avoids the cancellation in 1 - p**n near p**n = 1
        return complex(sum(p**j for j in range(n))) if n else 0j
    return (1 - p**x) / (1 - p)


def qfactorial(n: int, p: complex) -> complex:
    """``[n]_p! = [1]_p [2]_p ... [n]_p`` with ``[0]_p! = 1``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = 1 + 0j
    for j in range(1, n + 1):
        out *= qnumber(j, p)
    return out


def root_qfactorial(n: int, p: complex) -> complex:
    """``([n]_p!)**(1/2)`` taken as the product of principal roots of each ``[j]_p``.

    For ``p = q`` the arguments of ``[j]_q`` lie in ``[0, pi)``, so this root
    has argument ``pi n (n-1) / (4k)`` and is consistent with the matrix
    elements of the k-fermion operators. The principal root of the full
    product would flip sign once that argument passes ``pi/2`` (k >= 5).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = 1 + 0j
    for j in range(1, n + 1):
        out *= principal_sqrt(qnumber(j, p))
    return out


def qexp(x, p: complex, terms: int):
    """Truncated deformed exponential ``sum_{n < terms} x**n / [n]_p!``.

    ``x`` may be a complex number, a square numpy array or anything with a
    multiplication and ``one()`` (see :class:`kfsusy.grassmann.GrassmannElement`).
    Powers of a nilpotent argument vanish on their own.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if isinstance(x, np.ndarray):
        one = np.eye(x.shape[0], dtype=complex)
        mul = np.matmul
    elif hasattr(x, "one"):
        one = x.one()
        mul = lambda a, b: a * b  # noqa: E731
    else:
        one = 1 + 0j
        mul = lambda a, b: a * b  # noqa: E731
    total = one
    power = one
    for n in range(1, terms):
        power = mul(power, x)
        total = total + power * (1 / qfactorial(n, p))
    return total
