"""Report documents and canonical serialization.

Complex numbers serialize as [re, im] pairs, exact rationals as [num, den]
integer pairs.  Floats are rounded to a configurable number of significant
digits before JSON encoding; since rounding is idempotent, parsing the
output and re-serializing it reproduces the bytes exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .curves import CurveSpec
from .uniformize import UniformizationResult, fixed_point_radius

SCHEMA_VERSION = "1"
DEFAULT_PRECISION = 7


def round_sig(x: float, precision: int = DEFAULT_PRECISION) -> float:
    """Round to `precision` significant digits; exact zero stays 0.0."""
    if x == 0:
        return 0.0
    return float(f"{x:.{precision}g}")


def _walk(obj, precision: int):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, complex):
        return [round_sig(obj.real, precision), round_sig(obj.imag, precision)]
    if isinstance(obj, float):
        return round_sig(obj, precision)
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, dict):
        return {str(k): _walk(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_walk(v, precision) for v in obj]
    return obj


def canonical_json(obj, precision: int = DEFAULT_PRECISION) -> str:
    """Sorted keys, two-space indent, floats pre-rounded.  No trailing newline."""
    return json.dumps(_walk(obj, precision), sort_keys=True, indent=2)


def matrix_entry(m) -> list:
    """2x2 nested list of complex entries, ready for _walk."""
    return [[m.a, m.b], [m.c, m.d]]


def curve_summary(c: CurveSpec) -> dict:
    return {
        "degree": c.degree,
        "sign": c.sign,
        "genus": c.genus,
        "parity": c.parity.value,
    }


def uniformization_report(curve: CurveSpec, result: UniformizationResult, *,
                          topology=None, genus_range=None) -> dict:
    """Assemble the full pipeline document (plain dicts, unrounded)."""
    params = result.params
    base = result.base_index
    rep = result.verification
    doc = {
        "schema_version": SCHEMA_VERSION,
        "curve": curve_summary(curve),
        "parameters": {
            "alpha": params.alpha,
            "a": params.a,
            "fixed_point_radius": fixed_point_radius(params),
        },
        "base_index": base,
        "convention": "normalized" if result.normalized_output else "raw",
        "matrices": {
            "sides": {f"S{r}": matrix_entry(m)
                      for r, m in enumerate(result.side_transforms, start=1)},
            "generators": {f"S{base}S{r}": matrix_entry(m)
                           for r, m in zip(result.generator_labels,
                                           result.generators)},
        },
        "fixed_points": list(result.fixed_points),
        "tessellation": {"p": result.tessellation.p, "q": result.tessellation.q},
        "area": result.area,
        "verification": {
            "all_sides_involutive": rep.all_sides_involutive,
            "side_involution_residual": rep.side_involution_residual,
            "classes": [str(c) for c in rep.classes],
            "identity_indices": list(rep.identity_indices),
            "duplicate_pairs": [list(p) for p in rep.duplicate_pairs],
            "relation_residuals": dict(rep.relation_residuals),
        },
    }
    if topology is not None:
        doc["topology"] = {"V": topology.V, "E": topology.E, "F": topology.F,
                           "chi": topology.chi, "genus": topology.genus}
    if genus_range is not None:
        doc["genus_range"] = {"g_min": genus_range.g_min,
                              "g_max": genus_range.g_max}
    return doc
