"""Hyperelliptic curve bookkeeping for y^2 = z^n +- 1, n >= 5.

Genus and parity from the degree, singularities as roots of unity, the
integer-shifted root representation, and monic polynomial expansion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .hyperbolic import Tessellation

COEFF_TRIM_TOL = 1e-12


class DegreeTooSmall(ValueError):
    """Hyperelliptic here means degree at least 5."""


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class CurveSpec:
    """y^2 = z^degree + sign (sign -1 gives z^n - 1)."""

    degree: int
    sign: int
    genus: int
    parity: Parity

    @property
    def singularities(self) -> tuple:
        """Roots of z^n = -sign: the curve's branch points, all unit modulus."""
        n = self.degree
        if self.sign == -1:
            return tuple(cmath.exp(2j * math.pi * k / n) for k in range(n))
        return tuple(cmath.exp(1j * math.pi * (2 * k + 1) / n) for k in range(n))


def curve_from_degree(n: int, sign: int = -1) -> CurveSpec:
    if n < 5:
        raise DegreeTooSmall(f"degree {n} < 5")
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    if n % 2:
        return CurveSpec(n, sign, (n - 1) // 2, Parity.ODD)
    return CurveSpec(n, sign, (n - 2) // 2, Parity.EVEN)


def tessellation_for_curve(c: CurveSpec) -> Tessellation:
    """{4g,4g} for odd degree, {4g+2, 2g+1} for even degree."""
    g = c.genus
    if c.parity is Parity.ODD:
        return Tessellation(4 * g, 4 * g)
    return Tessellation(4 * g + 2, 2 * g + 1)


def integer_roots(n: int) -> list:
    """n consecutive integers standing in for the n roots of unity.

    Odd n: symmetric about 0.  Even n: one extra on the positive side.
    """
    if n < 5:
        raise DegreeTooSmall(f"degree {n} < 5")
    if n % 2:
        half = (n - 1) // 2
        return list(range(-half, half + 1))
    return list(range(-(n - 2) // 2, n // 2 + 1))


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        # strip trailing (high-order) zeros but keep at least one entry
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        if not cs:
            cs = (0j,)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def one(cls) -> "Poly":
        return cls((1.0,))

    @classmethod
    def zero(cls) -> "Poly":
        return cls((0.0,))

    @classmethod
    def variable(cls) -> "Poly":
        return cls((0.0, 1.0))

    @property
    def degree(self) -> int:
        # zero polynomial reports -1
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.degree == -1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scaled(-1.0)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero()
        return Poly(tuple(np.convolve(self.coeffs, other.coeffs)))

    def scaled(self, s: complex) -> "Poly":
        return Poly(tuple(s * c for c in self.coeffs))

    def derivative(self) -> "Poly":
        if len(self.coeffs) == 1:
            return Poly.zero()
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def roots(self) -> np.ndarray:
        if self.degree < 1:
            return np.array([], dtype=complex)
        return np.roots(list(reversed(self.coeffs)))

    def trimmed(self, tol: float = COEFF_TRIM_TOL) -> "Poly":
        """Zero out coefficients that are float noise relative to the largest."""
        scale = max((abs(c) for c in self.coeffs), default=0.0)
        if scale == 0.0:
            return Poly.zero()
        return Poly(tuple(0.0 if abs(c) <= tol * scale else c for c in self.coeffs))


def expand_poly(roots) -> Poly:
    """Monic product of (z - r) over the root list; empty list gives 1."""
    out = Poly.one()
    for r in roots:
        out = out * Poly((-complex(r), 1.0))
    return out
