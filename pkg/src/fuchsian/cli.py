"""Command-line interface.

Subcommands: uniformize, genus-range, tessellation, ode (build | classify),
verify.  Output goes to stdout as canonical JSON, an aligned text table, or
a static SVG figure.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import curves, embed, fode, hyperbolic
from .moebius import TransformClass, is_infinity
from .uniformize import GenusTooSmall, fixed_point_radius, uniformize
from .report import (
    DEFAULT_PRECISION,
    SCHEMA_VERSION,
    canonical_json,
    round_sig,
    uniformization_report,
)

CHECK_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() can own the exit code
    def error(self, message):
        raise _UsageError(message)


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _int_pair_arg(text: str):
    parts = text.split(",")
    try:
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected two integers P,Q, got {text!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="fuchsian",
                     description="Uniformization of y^2 = z^n - 1 and friends.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p_uni = sub.add_parser("uniformize", help="side pairings and generators")
    p_uni.add_argument("--degree", type=int, required=True)
    p_uni.add_argument("--sign", choices=("plus", "minus"), default="minus")
    p_uni.add_argument("--base", type=int, default=1)
    p_uni.add_argument("--normalize", action="store_true",
                       help="emit det-1 generators instead of raw products")
    p_uni.add_argument("--format", choices=("json", "table", "svg"),
                       default="json")
    p_uni.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_uni.add_argument("--tolerance", type=float, default=1e-6,
                       help="projective tolerance for duplicate detection")
    p_uni.add_argument("--genus-range", type=_int_pair_arg, default=None,
                       metavar="M,N", help="embed K_{M,N} genus bounds in the report")

    p_gr = sub.add_parser("genus-range", help="K_{m,n} embedding genus bounds")
    p_gr.add_argument("m", type=int)
    p_gr.add_argument("n", type=int)

    p_tess = sub.add_parser("tessellation", help="tessellation data")
    grp = p_tess.add_mutually_exclusive_group(required=True)
    grp.add_argument("--degree", type=int)
    grp.add_argument("--pq", type=_int_pair_arg, metavar="P,Q")
    p_tess.add_argument("--precision", type=int, default=DEFAULT_PRECISION)

    p_ode = sub.add_parser("ode", help="differential equations")
    ode_sub = p_ode.add_subparsers(dest="ode_command", required=True,
                                   parser_class=_Parser)
    p_build = ode_sub.add_parser("build", help="curve equation for degree 5..8")
    p_build.add_argument("--degree", type=int, required=True)
    p_build.add_argument("--k1", type=_complex_arg, default=0j, metavar="RE,IM")
    p_build.add_argument("--k2", type=_complex_arg, default=0j, metavar="RE,IM")
    p_build.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_cls = ode_sub.add_parser("classify", help="classify a named equation")
    p_cls.add_argument("--named", required=True)
    p_cls.add_argument("--params", type=_complex_arg, nargs="*", default=[],
                       metavar="RE,IM")
    p_cls.add_argument("--precision", type=int, default=DEFAULT_PRECISION)

    p_ver = sub.add_parser("verify", help="run the verification checks")
    p_ver.add_argument("--degree", type=int, required=True)

    return parser


def run(argv=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "uniformize":
            return _cmd_uniformize(args)
        if args.command == "genus-range":
            return _cmd_genus_range(args)
        if args.command == "tessellation":
            return _cmd_tessellation(args)
        if args.command == "ode":
            return _cmd_ode(args)
        return _cmd_verify(args)
    except (curves.DegreeTooSmall, embed.BadDimensions, fode.UnsupportedDegree,
            fode.UnknownName, fode.BadParamCount, GenusTooSmall,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _fmt_complex(z: complex, precision: int) -> str:
    re = round_sig(z.real, precision)
    im = round_sig(z.imag, precision)
    return f"{re:.{precision}g}{im:+.{precision}g}i"


def _cmd_uniformize(args) -> int:
    sign = -1 if args.sign == "minus" else 1
    curve = curves.curve_from_degree(args.degree, sign)
    result = uniformize(curve, normalize_output=args.normalize,
                             base=args.base, duplicate_tol=args.tolerance)
    topology = hyperbolic.tessellation_topology(result.tessellation)
    gr = embed.genus_range(*args.genus_range) if args.genus_range else None

    if args.format == "json":
        doc = uniformization_report(curve, result, topology=topology,
                                    genus_range=gr)
        print(canonical_json(doc, args.precision))
        return 0
    if args.format == "table":
        for line in _render_table(curve, result, args.precision):
            print(line)
        return 0
    print(_render_svg(curve, result))
    return 0


def _render_table(curve, result, precision):
    p = result.params
    yield (f"degree {p.degree}  curve y^2 = z^{p.degree} "
           f"{'-' if curve.sign == -1 else '+'} 1  genus {p.genus}")
    yield (f"alpha = {p.alpha.numerator}/{p.alpha.denominator}  "
           f"a = {round_sig(p.a, precision):.{precision}g}  "
           f"tessellation {{{result.tessellation.p},{result.tessellation.q}}}  "
           f"area = {round_sig(result.area, precision):.{precision}g}")
    yield f"convention: {'normalized' if result.normalized_output else 'raw'}"
    yield ""
    rows = [("generator", "(1,1)", "(1,2)", "(2,1)", "(2,2)", "class")]
    base = result.base_index
    for r, m, cls in zip(result.generator_labels, result.generators,
                         result.verification.classes):
        rows.append((f"S{base}S{r}",
                     _fmt_complex(m.a, precision), _fmt_complex(m.b, precision),
                     _fmt_complex(m.c, precision), _fmt_complex(m.d, precision),
                     str(cls)))
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    for row in rows:
        yield "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()


def _render_svg(curve, result, size=480) -> str:
    """Unit disk, ideal vertices, side geodesics, interior fixed points."""
    half = size / 2.0
    scale = half / 1.15

    def pt(z):
        # flip the imaginary axis so the figure reads in math orientation
        return half + scale * z.real, half - scale * z.imag

    roots = curve.singularities
    n = len(roots)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{half}" cy="{half}" r="{scale}" fill="none" '
        f'stroke="black" stroke-width="1.5"/>',
    ]
    for k in range(n):
        u, v = roots[k], roots[(k + 1) % n]
        mid = (u + v) / abs(u + v)
        delta_half = math.acos(min(abs(u + v) / 2.0, 1.0))
        center = mid / math.cos(delta_half)
        radius = math.tan(delta_half) * scale
        ux, uy = pt(u)
        vx, vy = pt(v)
        cx, cy = pt(center)
        cross = (ux - cx) * (vy - cy) - (uy - cy) * (vx - cx)
        sweep = 1 if cross > 0 else 0
        parts.append(
            f'<path d="M {ux:.2f} {uy:.2f} A {radius:.2f} {radius:.2f} 0 0 '
            f'{sweep} {vx:.2f} {vy:.2f}" fill="none" stroke="steelblue" '
            f'stroke-width="1.2"/>')
    for z in roots:
        x, y = pt(z)
        parts.append(f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="4" '
                     f'fill="black"/>')
    for z in result.fixed_points:
        x, y = pt(z)
        parts.append(f'<circle class="fixed-point" cx="{x:.2f}" cy="{y:.2f}" '
                     f'r="3" fill="crimson"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def _cmd_genus_range(args) -> int:
    r = embed.genus_range(args.m, args.n)
    print(f"g_min={r.g_min} g_max={r.g_max}")
    return 0


def _cmd_tessellation(args) -> int:
    if args.degree is not None:
        tess = curves.tessellation_for_curve(curves.curve_from_degree(args.degree))
    else:
        tess = hyperbolic.Tessellation(*args.pq)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tessellation": {"p": tess.p, "q": tess.q},
        "hyperbolic": hyperbolic.tessellation_valid(tess),
    }
    try:
        doc["area"] = hyperbolic.regular_polygon_area(tess)
    except hyperbolic.NotHyperbolic:
        doc["area"] = None
    try:
        topo = hyperbolic.tessellation_topology(tess)
        doc["topology"] = {"V": topo.V, "E": topo.E, "F": topo.F,
                           "chi": topo.chi, "genus": topo.genus}
    except (hyperbolic.OddSides, hyperbolic.NonIntegerVertexCycle, ValueError) as exc:
        doc["topology"] = None
        doc["topology_note"] = str(exc)
    print(canonical_json(doc, args.precision))
    return 0


def _point_entry(pc) -> dict:
    loc = "infinity" if is_infinity(pc.location) else pc.location
    return {"location": loc, "kind": str(pc.kind)}


def _rational_entry(rf) -> dict:
    return {"numerator": list(rf.num.coeffs), "denominator": list(rf.den.coeffs)}


def _cmd_ode(args) -> int:
    if args.ode_command == "build":
        curve = curves.curve_from_degree(args.degree)
        ode = fode.curve_ode(curve, args.k1, args.k2)
        poly = curves.expand_poly(curves.integer_roots(args.degree))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "degree": args.degree,
            "curve_polynomial": list(poly.coeffs),
            "k1": args.k1,
            "k2": args.k2,
            "p1": _rational_entry(ode.p1),
            "p2": _rational_entry(ode.p2),
            "singular_points": [_point_entry(pc) for pc in fode.singular_points(ode)],
            "fuchsian": fode.is_fuchsian(ode),
        }
    else:
        ode = fode.named_equation(args.named, args.params)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "name": ode.params.get("name"),
            "params": list(args.params),
            "p1": _rational_entry(ode.p1),
            "p2": _rational_entry(ode.p2),
            "singular_points": [_point_entry(pc) for pc in fode.singular_points(ode)],
            "fuchsian": fode.is_fuchsian(ode),
        }
    print(canonical_json(doc, args.precision))
    return 0


def _cmd_verify(args) -> int:
    curve = curves.curve_from_degree(args.degree)
    result = uniformize(curve)
    p = result.params
    rep = result.verification
    checks = []

    checks.append(("side involutions",
                   rep.side_involution_residual < CHECK_TOL,
                   f"residual {rep.side_involution_residual:.3e}"))

    rho = fixed_point_radius(p)
    spread = max(abs(abs(z) - rho) for z in result.fixed_points)
    checks.append(("fixed-point radius", spread < CHECK_TOL,
                   f"rho {rho:.7f}, spread {spread:.3e}"))

    spacing = 2.0 * math.pi * float(p.alpha)
    gap_err = max(abs((p.thetas[i + 1] - p.thetas[i]) - spacing)
                  for i in range(len(p.thetas) - 1))
    checks.append(("fixed-point spacing", gap_err < CHECK_TOL,
                   f"2 pi alpha = {spacing:.7f}, error {gap_err:.3e}"))

    topo = hyperbolic.tessellation_topology(result.tessellation)
    checks.append(("topology genus", topo.genus == p.genus,
                   f"V={topo.V} E={topo.E} F={topo.F} chi={topo.chi} "
                   f"genus {topo.genus} vs curve {p.genus}"))

    expected_area = 4.0 * math.pi * (p.genus - 1)
    checks.append(("area identity", abs(result.area - expected_area) < CHECK_TOL,
                   f"area {result.area:.7f} vs 4 pi (g-1) = {expected_area:.7f}"))

    non_identity = [cls for lbl, cls in zip(result.generator_labels, rep.classes)
                    if lbl not in rep.identity_indices]
    checks.append(("generators hyperbolic",
                   all(c is TransformClass.HYPERBOLIC for c in non_identity),
                   ", ".join(str(c) for c in rep.classes)))

    failed = False
    for name, ok, detail in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            failed = True

    if rep.identity_indices or rep.duplicate_pairs:
        base = result.base_index
        print("warning: degenerate generator set")
        for r in rep.identity_indices:
            print(f"  projective identity: S{base}S{r}")
        for r1, r2 in rep.duplicate_pairs:
            print(f"  duplicate pair: S{base}S{r1} ~ S{base}S{r2}")

    for name, residual in sorted(rep.relation_residuals.items()):
        print(f"relation residual {name}: {residual:.6e}")

    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
