"""Second-order ODEs y'' + p1 y' + p2 y = 0 with rational coefficients.

Construction from singularity data, a catalog of classical named equations,
the Whittaker normal-form equation built from a polynomial f, and
regular-singular-point classification on the extended plane.

Rational functions are kept in factored form (leading coefficient plus root
list), so pole orders are exact multiplicity counts even for double poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .curves import CurveSpec, DegreeTooSmall, Poly, expand_poly, integer_roots
from .moebius import INFINITY, is_infinity

# root clustering radius for cancellation / multiplicity counting
ROOT_MATCH_TOL = 1e-9
# distinctness check on user polynomials: a genuine double root re-found
# numerically splits by about sqrt(machine eps * coefficient scale), up to
# ~1e-7, so the repeated-root detector must sit well above that
DISTINCT_ROOT_TOL = 1e-6
# restriction residuals in build_fuchsian
CONSTRAINT_TOL = 1e-9


class ConstraintViolated(ValueError):
    """One of the four Fuchsian restrictions fails; names the restriction."""

    def __init__(self, restriction: str, residual: complex):
        self.restriction = restriction
        self.residual = residual
        super().__init__(f"restriction {restriction} violated, residual {residual}")


class DuplicateXi(ValueError):
    pass


class UnknownName(ValueError):
    pass


class BadParamCount(ValueError):
    pass


class RepeatedRoots(ValueError):
    pass


class UnsupportedDegree(ValueError):
    pass


class RootFindingFailure(RuntimeError):
    pass


def _roots_of(p: Poly) -> np.ndarray:
    try:
        return p.roots()
    except np.linalg.LinAlgError as exc:  # pragma: no cover - numpy rarely fails
        raise RootFindingFailure(str(exc)) from exc


def _match_tol(z: complex) -> float:
    return ROOT_MATCH_TOL * (1.0 + abs(z))


@dataclass(frozen=True)
class RationalFn:
    """num/den with common roots cancelled at construction.

    lead * prod(z - r) over num_roots gives the numerator (same for the
    denominator); num and den hold the expanded polynomials for display.
    """

    num: Poly
    den: Poly
    num_lead: complex
    den_lead: complex
    num_roots: tuple
    den_roots: tuple

    @property
    def is_zero(self) -> bool:
        return self.num_lead == 0

    def __call__(self, z: complex) -> complex:
        # factored evaluation: stable, no expansion noise
        if self.is_zero:
            return 0j
        acc = complex(self.num_lead) / complex(self.den_lead)
        for r in self.num_roots:
            acc *= z - r
        for r in self.den_roots:
            acc /= z - r
        return acc

    def pole_order(self, point: complex) -> int:
        """Multiplicity of point among denominator roots minus numerator roots."""
        if self.is_zero:
            return 0
        tol = _match_tol(point)
        d = sum(1 for r in self.den_roots if abs(r - point) <= tol)
        n = sum(1 for r in self.num_roots if abs(r - point) <= tol)
        return max(0, d - n)


def _build_rational(num: Poly, den_lead: complex, den_roots) -> RationalFn:
    """Cancel num roots against the factored denominator and assemble."""
    num = num.trimmed()
    den_roots = [complex(r) for r in den_roots]
    if complex(den_lead) == 0:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return RationalFn(Poly.zero(), Poly.one(), 0j, 1.0, (), ())
    num_lead = num.coeffs[-1]
    num_roots = [complex(r) for r in _roots_of(num)]
    remaining_den = []
    for s in den_roots:
        hit = None
        for i, r in enumerate(num_roots):
            if abs(r - s) <= _match_tol(s):
                hit = i
                break
        if hit is None:
            remaining_den.append(s)
        else:
            num_roots.pop(hit)
    num_poly = expand_poly(num_roots).scaled(num_lead).trimmed()
    den_poly = expand_poly(remaining_den).scaled(den_lead).trimmed()
    return RationalFn(num_poly, den_poly, num_lead, complex(den_lead),
                      tuple(num_roots), tuple(remaining_den))


def rational_fn(num: Poly, den: Poly) -> RationalFn:
    """General constructor from two polynomials; den roots found numerically."""
    den = den.trimmed()
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    return _build_rational(num, den.coeffs[-1], _roots_of(den))


ZERO_RATIONAL = RationalFn(Poly.zero(), Poly.one(), 0j, 1.0, (), ())


class PointKind(Enum):
    ORDINARY = "Ordinary"
    REGULAR_SINGULAR = "RegularSingular"
    IRREGULAR_SINGULAR = "IrregularSingular"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PointClass:
    location: object  # complex or INFINITY
    kind: PointKind


@dataclass(frozen=True)
class SecondOrderODE:
    """y'' + p1 y' + p2 y = 0."""

    p1: RationalFn
    p2: RationalFn
    params: dict = field(default_factory=dict)


def build_fuchsian(xis, A, B, C, K1: complex = 0j, K2: complex = 0j) -> SecondOrderODE:
    """Equation with simple p1 poles (residues A) and p2 parts B/(z-xi)^2 + C/(z-xi).

    Validates the four classical restrictions (sum A = 2; sum C = 0;
    sum B + xi C = 0; sum 2 xi B + xi^2 C = 0) making infinity no worse
    than regular, each within 1e-9.  An empty singularity list skips the
    restrictions (they presuppose at least one finite singular point).
    """
    xis = [complex(x) for x in xis]
    A = [complex(x) for x in A]
    B = [complex(x) for x in B]
    C = [complex(x) for x in C]
    if not len(xis) == len(A) == len(B) == len(C):
        raise ValueError("xis, A, B, C must have equal lengths")
    for i in range(len(xis)):
        for j in range(i + 1, len(xis)):
            if abs(xis[i] - xis[j]) <= _match_tol(xis[i]):
                raise DuplicateXi(f"xi[{i}] and xi[{j}] coincide: {xis[i]}")
    if xis:
        checks = [
            ("A_1+...+A_n = 2", sum(A) - 2.0),
            ("C_1+...+C_n = 0", sum(C)),
            ("sum(B_i + xi_i C_i) = 0",
             sum(b + x * c for x, b, c in zip(xis, B, C))),
            ("sum(2 xi_i B_i + xi_i^2 C_i) = 0",
             sum(2 * x * b + x * x * c for x, b, c in zip(xis, B, C))),
        ]
        for name, residual in checks:
            if abs(residual) > CONSTRAINT_TOL:
                raise ConstraintViolated(name, residual)

    D = expand_poly(xis)
    # p1 numerator over common denominator D
    p1_num = D.scaled(K1)
    for i, x in enumerate(xis):
        p1_num = p1_num + expand_poly(xis[:i] + xis[i + 1:]).scaled(A[i])
    p1 = _build_rational(p1_num, 1.0, xis)
    # p2 over D^2; the B_i term misses (z - xi_i)^2, the C_i term one factor
    p2_num = (D * D).scaled(K2)
    for i, x in enumerate(xis):
        others = expand_poly(xis[:i] + xis[i + 1:])
        others2 = others * others
        p2_num = p2_num + others2.scaled(B[i])
        p2_num = p2_num + (others2 * Poly((-x, 1.0))).scaled(C[i])
    p2 = _build_rational(p2_num, 1.0, [x for x in xis for _ in range(2)])
    return SecondOrderODE(p1, p2, params={"K1": complex(K1), "K2": complex(K2)})


_NAMED_PARAM_COUNTS = {
    "Legendre": 1,
    "Tchebychev": 1,
    "Heun": 7,
    "Hypergeometric": 3,
    "WhittakerHypergeometric": 0,
}


def named_equation(name: str, params=()) -> SecondOrderODE:
    """Catalog of classical equations, coefficients exactly as printed.

    Legendre(lambda):        p1 = 2z/(1-z^2),          p2 = lambda(lambda+1)/(1-z^2)
    Tchebychev(lambda):      p1 = z/(1-z^2),           p2 = lambda^2/(1-z^2)
    Heun(alpha,beta,gamma,delta,epsilon,a,q):
                             p1 = gamma/z + delta/(z-1) + epsilon/(z-a),
                             p2 = (alpha beta z - q)/(z(z-1)(z-a))
    Hypergeometric(a,b,c):   p1 = [c-(1+a+b)z]/(z(1-z)), p2 = -ab/(z(1-z))
    WhittakerHypergeometric: 25x(x-1) y'' + 20(2x-1) y' + 2 y = 0
    """
    canonical = {k.lower(): k for k in _NAMED_PARAM_COUNTS}
    key = canonical.get(str(name).lower())
    if key is None:
        raise UnknownName(f"no equation named {name!r}")
    params = [complex(p) for p in params]
    want = _NAMED_PARAM_COUNTS[key]
    if len(params) != want:
        raise BadParamCount(f"{key} takes {want} parameter(s), got {len(params)}")

    if key == "Legendre":
        lam = params[0]
        p1 = _build_rational(Poly((0.0, 2.0)), -1.0, [1.0, -1.0])
        p2 = _build_rational(Poly((lam * (lam + 1),)), -1.0, [1.0, -1.0])
        named = {"lambda": lam}
    elif key == "Tchebychev":
        lam = params[0]
        p1 = _build_rational(Poly((0.0, 1.0)), -1.0, [1.0, -1.0])
        p2 = _build_rational(Poly((lam * lam,)), -1.0, [1.0, -1.0])
        named = {"lambda": lam}
    elif key == "Heun":
        al, be, ga, de, ep, a, q = params
        num = (expand_poly([1.0, a]).scaled(ga)
               + expand_poly([0.0, a]).scaled(de)
               + expand_poly([0.0, 1.0]).scaled(ep))
        p1 = _build_rational(num, 1.0, [0.0, 1.0, a])
        p2 = _build_rational(Poly((-q, al * be)), 1.0, [0.0, 1.0, a])
        named = {"alpha": al, "beta": be, "gamma": ga, "delta": de,
                 "epsilon": ep, "a": a, "q": q}
    elif key == "Hypergeometric":
        a, b, c = params
        # z(1-z) = -1 * z(z-1)
        p1 = _build_rational(Poly((c, -(1.0 + a + b))), -1.0, [0.0, 1.0])
        p2 = _build_rational(Poly((-a * b,)), -1.0, [0.0, 1.0])
        named = {"a": a, "b": b, "c": c}
    else:  # WhittakerHypergeometric
        p1 = _build_rational(Poly((-20.0, 40.0)), 25.0, [0.0, 1.0])
        p2 = _build_rational(Poly((2.0,)), 25.0, [0.0, 1.0])
        named = {}

    return SecondOrderODE(p1, p2, params={"name": key, **named})


def whittaker_equation(f: Poly) -> SecondOrderODE:
    """y'' + (3/16) [ (f'/f)^2 - ((2g+2)/(2g+1)) f''/f ] y = 0.

    g is inferred from deg f (ceil(deg/2) - 1); f must have distinct roots.
    """
    f = f.trimmed()
    n = f.degree
    if n < 5:
        raise DegreeTooSmall(f"deg f = {n} < 5")
    roots = [complex(r) for r in _roots_of(f)]
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= DISTINCT_ROOT_TOL * (1.0 + abs(roots[i])):
                raise RepeatedRoots(f"roots {roots[i]} and {roots[j]} coincide")
    g = math.ceil(n / 2) - 1
    ratio = Fraction(2 * g + 2, 2 * g + 1)
    fp = f.derivative()
    fpp = fp.derivative()
    num = ((fp * fp) - (fpp * f).scaled(float(ratio))).scaled(3.0 / 16.0)
    lead = f.coeffs[-1]
    p2 = _build_rational(num, lead * lead, [r for r in roots for _ in range(2)])
    return SecondOrderODE(ZERO_RATIONAL, p2,
                          params={"genus": g, "coefficient_ratio": ratio})


def curve_ode(c: CurveSpec, k1: complex = 0j, k2: complex = 0j) -> SecondOrderODE:
    """The catalog equation attached to y^2 = z^n - 1 for n in 5..8.

    In monic form: p1 = 2/(z - s) + k1 and p2 = k2, where s = -1 for
    degrees 5 and 7 and s = +1 for degrees 6 and 8.  (The printed equations
    carry the expanded curve polynomial as an overall factor, which cancels;
    expand_poly(integer_roots(n)) reproduces it.)
    """
    n = c.degree
    if not 5 <= n <= 8:
        raise UnsupportedDegree(f"degree {n} not in 5..8")
    s = -1.0 if n % 2 else 1.0
    k1, k2 = complex(k1), complex(k2)
    p1 = _build_rational(Poly((2.0 - k1 * s, k1)), 1.0, [s])
    p2 = _build_rational(Poly((k2,)), 1.0, []) if k2 != 0 else ZERO_RATIONAL
    return SecondOrderODE(p1, p2, params={"k1": k1, "k2": k2, "s": s})


def _one_sided(poly_roots, lead) -> Poly:
    """lead * prod(1 - r w) over nonzero roots: p(1/w) * w^deg in the variable w."""
    out = Poly((complex(lead),))
    for r in poly_roots:
        if r != 0:
            out = out * Poly((1.0, -r))
    return out


def _infinity_pole_orders(ode: SecondOrderODE) -> tuple:
    """Pole orders at w = 0 of P1 = 2/w - p1(1/w)/w^2 and P2 = p2(1/w)/w^4.

    Writing p(1/w) = w^(deg den - deg num) N(w)/D(w) with N(0), D(0) != 0
    makes the orders pure degree arithmetic, with one cancellation check for
    P1 when the exponent is exactly -1.
    """
    p1, p2 = ode.p1, ode.p2
    if p2.is_zero:
        o2 = 0
    else:
        e2 = len(p2.den_roots) - len(p2.num_roots) - 4
        o2 = max(0, -e2)
    if p1.is_zero:
        o1 = 1  # P1 = 2/w
    else:
        e1 = len(p1.den_roots) - len(p1.num_roots) - 2
        if e1 >= 0:
            o1 = 1
        elif e1 == -1:
            # P1 = (2 D - N)/(w D); vanishing order of 2D - N at 0 lowers the pole
            N = _one_sided(p1.num_roots, p1.num_lead)
            D = _one_sided(p1.den_roots, p1.den_lead)
            h = (D.scaled(2.0) - N).trimmed()
            if h.is_zero:
                o1 = 0
            else:
                m = 0
                while m < len(h.coeffs) and h.coeffs[m] == 0:
                    m += 1
                o1 = max(0, 1 - m)
        else:
            o1 = -e1
    return o1, o2


def _kind(o1: int, o2: int) -> PointKind:
    if o1 == 0 and o2 == 0:
        return PointKind.ORDINARY
    if o1 <= 1 and o2 <= 2:
        return PointKind.REGULAR_SINGULAR
    return PointKind.IRREGULAR_SINGULAR


def classify_point(ode: SecondOrderODE, pt) -> PointClass:
    """Ordinary / regular singular / irregular singular at a point or infinity."""
    if is_infinity(pt):
        o1, o2 = _infinity_pole_orders(ode)
        return PointClass(INFINITY, _kind(o1, o2))
    pt = complex(pt)
    return PointClass(pt, _kind(ode.p1.pole_order(pt), ode.p2.pole_order(pt)))


def singular_points(ode: SecondOrderODE):
    """Finite poles of p1 and p2 (deduplicated) plus infinity, classified."""
    finite = []
    for r in ode.p1.den_roots + ode.p2.den_roots:
        if not any(abs(r - f) <= _match_tol(f) for f in finite):
            finite.append(r)
    finite.sort(key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    out = [classify_point(ode, z) for z in finite]
    out.append(classify_point(ode, INFINITY))
    return out


def is_fuchsian(ode: SecondOrderODE) -> bool:
    """True iff no singular point (including infinity) is irregular."""
    return all(pc.kind is not PointKind.IRREGULAR_SINGULAR
               for pc in singular_points(ode))
