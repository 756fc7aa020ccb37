"""Moebius transformations as 2x2 complex matrices.

A map z -> (az + b)/(cz + d) is represented by its coefficient matrix
[[a, b], [c, d]], kept up to a nonzero complex scalar.  Everything here is
scale-aware: classification works on tr^2/det, equality is projective, and
``normalize`` divides by the principal square root of the determinant.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

# det below this (relative to the largest entry) counts as degenerate
DET_TOL = 1e-12
# parabolic boundary / identity test / imaginary-part cutoff for tr^2
CLASS_TOL = 1e-9


class DegenerateMap(ValueError):
    """Determinant vanishes; the matrix does not define a Moebius map."""


class AllPointsFixed(ValueError):
    """fixed_points called on (a scalar multiple of) the identity."""


class IndexOutOfRange(IndexError):
    """A word references a generator index outside the given list."""


class _Infinity:
    """The point at infinity of the extended complex plane (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def is_infinity(z) -> bool:
    return z is INFINITY


class TransformClass(Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    LOXODROMIC = "Loxodromic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MoebiusMap:
    """Matrix of a Moebius transformation, row-major entries a, b, c, d."""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_array(cls, m) -> "MoebiusMap":
        m = np.asarray(m, dtype=complex)
        return cls(complex(m[0, 0]), complex(m[0, 1]),
                   complex(m[1, 0]), complex(m[1, 1]))

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def _entry_scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d), 1.0)

    def _check_invertible(self):
        if abs(self.det) <= DET_TOL * self._entry_scale() ** 2:
            raise DegenerateMap(f"determinant {self.det} is effectively zero")

    def __call__(self, z):
        return apply(self, z)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return compose(self, other)

    def scaled(self, s: complex) -> "MoebiusMap":
        return MoebiusMap(self.a * s, self.b * s, self.c * s, self.d * s)

    def inverse(self) -> "MoebiusMap":
        self._check_invertible()
        det = self.det
        return MoebiusMap(self.d / det, -self.b / det,
                          -self.c / det, self.a / det)

    def is_disk_isometry(self, tol: float = CLASS_TOL) -> bool:
        """SU(1,1) shape up to scale: d = conj(a) and c = conj(b)."""
        s = self._entry_scale()
        return (abs(self.d - self.a.conjugate()) <= tol * s
                and abs(self.c - self.b.conjugate()) <= tol * s)


def apply(m: MoebiusMap, z):
    """Evaluate m at a point of the extended complex plane."""
    m._check_invertible()
    if is_infinity(z):
        if m.c == 0:
            return INFINITY
        return m.a / m.c
    z = complex(z)
    den = m.c * z + m.d
    if den == 0:
        return INFINITY
    return (m.a * z + m.b) / den


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Matrix product m1 * m2 (apply m2 first)."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def normalize(m: MoebiusMap) -> MoebiusMap:
    """Scale m to determinant 1 using the principal branch of sqrt.

    A negative real determinant therefore lands i times off a real matrix;
    projective comparisons must allow the four unit scalars +-1, +-i.
    """
    m._check_invertible()
    return m.scaled(1.0 / cmath.sqrt(m.det))


def projective_distance(m1: MoebiusMap, m2: MoebiusMap) -> float:
    """max-entry distance between normalized matrices, minimized over +-1, +-i."""
    n1 = normalize(m1).matrix()
    n2 = normalize(m2).matrix()
    return min(float(np.abs(n1 - s * n2).max()) for s in (1, -1, 1j, -1j))


def is_projectively_identity(m: MoebiusMap, tol: float = CLASS_TOL) -> bool:
    return projective_distance(m, MoebiusMap.identity()) < tol


def classify(m: MoebiusMap) -> TransformClass:
    """Trace classification on tr^2/det (scale invariant).

    Identity is tested first (projectively), since it shares tr^2/det = 4
    with the parabolic class.
    """
    m._check_invertible()
    if is_projectively_identity(m):
        return TransformClass.IDENTITY
    t2 = m.trace ** 2 / m.det
    if abs(t2.imag) >= CLASS_TOL:
        return TransformClass.LOXODROMIC
    if t2.real < 4.0 - CLASS_TOL:
        return TransformClass.ELLIPTIC
    if t2.real <= 4.0 + CLASS_TOL:
        return TransformClass.PARABOLIC
    return TransformClass.HYPERBOLIC


def fixed_points(m: MoebiusMap):
    """Solutions of c z^2 + (d - a) z - b = 0 on the extended plane.

    Two points generically; parabolic maps give one.  Finite points come
    first, ordered by increasing modulus then argument.
    """
    m._check_invertible()
    if is_projectively_identity(m):
        raise AllPointsFixed("every point is fixed")
    scale = m._entry_scale()
    cls = classify(m)
    if abs(m.c) <= DET_TOL * scale:
        # affine map z -> (a z + b)/d, always fixes infinity
        if abs(m.a - m.d) <= DET_TOL * scale:
            return [INFINITY]  # translation
        return _ordered([m.b / (m.d - m.a), INFINITY])
    if cls is TransformClass.PARABOLIC:
        return [(m.a - m.d) / (2.0 * m.c)]
    disc = (m.d - m.a) ** 2 + 4.0 * m.b * m.c
    root = cmath.sqrt(disc)
    return _ordered([(m.a - m.d + root) / (2.0 * m.c),
                     (m.a - m.d - root) / (2.0 * m.c)])


def _ordered(points):
    return sorted(points, key=lambda p: (1, 0.0, 0.0) if is_infinity(p)
                  else (0, abs(p), cmath.phase(p)))


def evaluate_word(generators, word) -> MoebiusMap:
    """Left-to-right product of generators[i]^e over (i, e) pairs, 1-based i.

    The empty word is the identity.  Exponents must be nonzero integers.
    """
    result = MoebiusMap.identity()
    n = len(generators)
    for index, exponent in word:
        if not 1 <= index <= n:
            raise IndexOutOfRange(f"generator index {index} not in 1..{n}")
        if exponent == 0:
            raise ValueError("word exponents must be nonzero")
        g = generators[index - 1]
        step = g if exponent > 0 else g.inverse()
        for _ in range(abs(exponent)):
            result = compose(result, step)
    return result


# --- Cayley transform between the half-plane and disk models ---------------
#
# C(z) = (z - i)/(z + i) sends the upper half-plane onto the unit disk.
# Conjugating a half-plane matrix by C gives the disk-model matrix.

_CAYLEY = MoebiusMap(1.0, -1j, 1.0, 1j)
_CAYLEY_INV = MoebiusMap(1j, 1j, -1.0, 1.0)  # inverse up to scale


def halfplane_point_to_disk(z: complex) -> complex:
    return apply(_CAYLEY, z)


def disk_point_to_halfplane(w: complex) -> complex:
    return apply(_CAYLEY_INV, w)


def to_disk_model(m: MoebiusMap) -> MoebiusMap:
    """Conjugate a half-plane isometry into the disk model."""
    return compose(compose(_CAYLEY, m), _CAYLEY_INV)


def to_halfplane_model(m: MoebiusMap) -> MoebiusMap:
    return compose(compose(_CAYLEY_INV, m), _CAYLEY)
