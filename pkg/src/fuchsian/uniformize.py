"""Side-pairing transformations and Fuchsian generators for y^2 = z^n - 1.

For a curve of genus g >= 2 set alpha = (g-1)/n and a = (2 cos(pi alpha) - 1)^(-1/2).
The n side transformations are

    M_r = [[a, -e^{i theta_r}], [e^{-i theta_r}, -a]],   theta_r = (4(r-1)+1) pi alpha / 2,

each an elliptic involution about the interior point rho e^{i theta_r},
rho = a - sqrt(a^2 - 1).  Products M_base M_r (r != base) generate the
Fuchsian group of the fundamental polygon; the raw products have
determinant (1 - a^2)^2 and dividing by (a^2 - 1) gives the det-1 forms.

Degree 8 is degenerate (alpha = 1/4 makes theta_r periodic): one product is
a projective identity and three pairs coincide.  That is reported, not
raised.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveSpec, tessellation_for_curve
from .hyperbolic import Tessellation, regular_polygon_area
from .moebius import (
    IndexOutOfRange,
    MoebiusMap,
    TransformClass,
    classify,
    compose,
    evaluate_word,
    normalize,
    projective_distance,
)

INVOLUTION_TOL = 1e-9
DUPLICATE_TOL = 1e-6


class GenusTooSmall(ValueError):
    """The construction needs genus >= 2 (alpha > 0)."""


@dataclass(frozen=True)
class MursiParams:
    degree: int
    genus: int
    alpha: Fraction  # exact (g-1)/n
    a: float
    thetas: tuple


def mursi_parameters(c: CurveSpec) -> MursiParams:
    """alpha, a, and the n side angles for the curve's uniformization."""
    g, n = c.genus, c.degree
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")
    alpha = Fraction(g - 1, n)
    base = 2.0 * math.cos(math.pi * float(alpha)) - 1.0
    if base <= 0.0:
        raise ValueError(
            f"alpha = {alpha} gives 2 cos(pi alpha) - 1 = {base} <= 0; "
            "the side transformations would not be real")
    a = base ** -0.5
    thetas = tuple((4 * (r - 1) + 1) * math.pi * float(alpha) / 2.0
                   for r in range(1, n + 1))
    return MursiParams(degree=n, genus=g, alpha=alpha, a=a, thetas=thetas)


def side_transformations(p: MursiParams):
    """The n raw side matrices M_r; det = 1 - a^2, trace 0, elliptic."""
    out = []
    for th in p.thetas:
        e = cmath.exp(1j * th)
        out.append(MoebiusMap(p.a, -e, e.conjugate(), -p.a))
    return out


def group_generators(p: MursiParams, base: int = 1):
    """Raw products M_base M_r for r != base, in increasing r."""
    if not 1 <= base <= p.degree:
        raise IndexOutOfRange(f"base {base} not in 1..{p.degree}")
    sides = side_transformations(p)
    m_base = sides[base - 1]
    return [compose(m_base, sides[r - 1])
            for r in range(1, p.degree + 1) if r != base]


def generator_labels(p: MursiParams, base: int = 1):
    """The r of each product M_base M_r, aligned with group_generators."""
    if not 1 <= base <= p.degree:
        raise IndexOutOfRange(f"base {base} not in 1..{p.degree}")
    return [r for r in range(1, p.degree + 1) if r != base]


def fixed_point_radius(p: MursiParams) -> float:
    """rho = a - sqrt(a^2 - 1): modulus of every side transformation's interior fixed point."""
    return p.a - math.sqrt(p.a * p.a - 1.0)


# Relation words of the side-pairing group presentations, on generators
# T_i = M_1 M_{i+1} (1-based indices into the generator list).  The octagon
# and 12-gon groups have a single relator; the 10- and 14-gon groups are
# printed as a pair of words both claimed to be the identity.
PRESENTATION_WORDS = {
    5: {"gamma8": ((1, 1), (2, -1), (3, 1), (4, -1),
                   (1, -1), (2, 1), (3, -1), (4, 1))},
    6: {"gamma10_a": ((1, 1), (2, -1), (3, 1), (4, -1), (5, 1)),
        "gamma10_b": ((1, -1), (2, 1), (3, -1), (4, 1), (5, -1))},
    7: {"gamma12": ((1, 1), (2, -1), (3, 1), (4, -1), (5, 1), (6, -1),
                    (1, -1), (2, 1), (3, -1), (4, 1), (5, -1), (6, 1))},
    8: {"gamma14_a": ((1, 1), (2, -1), (3, 1), (4, -1), (5, 1), (6, -1), (7, 1)),
        "gamma14_b": ((1, -1), (2, 1), (3, -1), (4, 1), (5, -1), (6, 1), (7, -1))},
}


@dataclass(frozen=True)
class VerificationReport:
    all_sides_involutive: bool
    side_involution_residual: float
    classes: tuple  # TransformClass per generator
    identity_indices: tuple  # r labels of projective-identity generators
    duplicate_pairs: tuple  # (r, r') label pairs of projectively equal generators
    relation_residuals: dict  # presentation name -> residual


@dataclass(frozen=True)
class UniformizationResult:
    params: MursiParams
    side_transforms: tuple  # raw M_r
    generators_raw: tuple
    generators_normalized: tuple
    generator_labels: tuple
    base_index: int
    normalized_output: bool
    fixed_points: tuple  # rho e^{i theta_r}
    tessellation: Tessellation
    area: float
    verification: VerificationReport

    @property
    def generators(self):
        """Raw or det-1 generators, per the normalized_output flag."""
        return self.generators_normalized if self.normalized_output else self.generators_raw


def verify_generators(result: UniformizationResult,
                      duplicate_tol: float = DUPLICATE_TOL) -> VerificationReport:
    """Classify generators, flag degenerate ones, evaluate the relation words.

    Everything here is reported; nothing raises.  Relation residuals are the
    projective distances of the evaluated words from the identity.
    """
    identity = MoebiusMap.identity()
    inv_residual = max(projective_distance(compose(m, m), identity)
                       for m in result.side_transforms)
    gens = result.generators_normalized
    labels = result.generator_labels
    classes = tuple(classify(m) for m in gens)
    identity_indices = tuple(lbl for lbl, cls in zip(labels, classes)
                             if cls is TransformClass.IDENTITY)
    duplicates = []
    for i in range(len(gens)):
        if classes[i] is TransformClass.IDENTITY:
            continue
        for j in range(i + 1, len(gens)):
            if classes[j] is TransformClass.IDENTITY:
                continue
            if projective_distance(gens[i], gens[j]) < duplicate_tol:
                duplicates.append((labels[i], labels[j]))
    residuals = {}
    for name, word in PRESENTATION_WORDS.get(result.params.degree, {}).items():
        w = evaluate_word(gens, word)
        residuals[name] = projective_distance(w, identity)
    return VerificationReport(
        all_sides_involutive=inv_residual < INVOLUTION_TOL,
        side_involution_residual=inv_residual,
        classes=classes,
        identity_indices=identity_indices,
        duplicate_pairs=tuple(duplicates),
        relation_residuals=residuals,
    )


def uniformize(c: CurveSpec, normalize_output: bool = False,
               base: int = 1,
               duplicate_tol: float = DUPLICATE_TOL) -> UniformizationResult:
    """Run the whole pipeline for one curve and verify the outcome."""
    params = mursi_parameters(c)
    sides = side_transformations(params)
    raw = group_generators(params, base)
    labels = generator_labels(params, base)
    norm = [normalize(m) for m in raw]
    rho = fixed_point_radius(params)
    fixed = tuple(rho * cmath.exp(1j * th) for th in params.thetas)
    tess = tessellation_for_curve(c)
    partial = UniformizationResult(
        params=params,
        side_transforms=tuple(sides),
        generators_raw=tuple(raw),
        generators_normalized=tuple(norm),
        generator_labels=tuple(labels),
        base_index=base,
        normalized_output=normalize_output,
        fixed_points=fixed,
        tessellation=tess,
        area=regular_polygon_area(tess),
        verification=None,
    )
    return dataclasses.replace(
        partial, verification=verify_generators(partial, duplicate_tol))
