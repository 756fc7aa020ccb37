import json
import math
from fractions import Fraction

from fuchsian.curves import curve_from_degree
from fuchsian.hyperbolic import Tessellation, tessellation_topology
from fuchsian.embed import genus_range
from fuchsian.report import canonical_json, round_sig, uniformization_report
from fuchsian.uniformize import uniformize


def test_round_sig():
    assert round_sig(1.23456789, 3) == 1.23
    assert round_sig(-1.23456789e-7, 4) == -1.235e-7
    assert round_sig(0.0, 5) == 0.0
    assert round_sig(123456.0, 2) == 120000.0


def test_canonical_json_scalar_handling():
    doc = {
        "z": 1.5 - 0.25j,
        "frac": Fraction(2, 7),
        "flag": True,
        "n": 3,
        "xs": [0.1234567891, 2],
    }
    text = canonical_json(doc, 7)
    parsed = json.loads(text)
    assert parsed["z"] == [1.5, -0.25]
    assert parsed["frac"] == [2, 7]
    assert parsed["flag"] is True   # bool survives, not coerced to a float
    assert parsed["n"] == 3
    assert parsed["xs"][0] == 0.1234568


def test_canonical_json_idempotent():
    res = uniformize(curve_from_degree(7))
    doc = uniformization_report(curve_from_degree(7), res)
    text = canonical_json(doc, 7)
    assert canonical_json(json.loads(text), 7) == text
    # keys come out sorted
    parsed = json.loads(text)
    assert list(parsed) == sorted(parsed)


def test_uniformization_report_contents():
    c = curve_from_degree(5)
    res = uniformize(c)
    doc = uniformization_report(
        c, res,
        topology=tessellation_topology(Tessellation(8, 8)),
        genus_range=genus_range(2, 8),
    )
    assert doc["curve"] == {"degree": 5, "sign": -1, "genus": 2, "parity": "odd"}
    assert doc["convention"] == "raw"
    assert doc["parameters"]["alpha"] == Fraction(1, 5)
    assert abs(doc["parameters"]["fixed_point_radius"] - 0.4858683) < 1e-6
    assert set(doc["matrices"]["generators"]) == {"S1S2", "S1S3", "S1S4", "S1S5"}
    assert set(doc["matrices"]["sides"]) == {"S1", "S2", "S3", "S4", "S5"}
    m = doc["matrices"]["generators"]["S1S2"]
    assert len(m) == 2 and len(m[0]) == 2
    assert doc["tessellation"] == {"p": 8, "q": 8}
    assert abs(doc["area"] - 4 * math.pi) < 1e-9
    assert doc["topology"]["genus"] == 2
    assert doc["genus_range"] == {"g_min": 0, "g_max": 3}
    assert doc["verification"]["all_sides_involutive"] is True
    assert doc["verification"]["classes"] == ["Hyperbolic"] * 4
    assert "gamma8" in doc["verification"]["relation_residuals"]


def test_report_normalized_convention():
    c = curve_from_degree(8)
    res = uniformize(c, normalize_output=True)
    doc = uniformization_report(c, res)
    assert doc["convention"] == "normalized"
    assert doc["verification"]["identity_indices"] == [5]
    assert doc["verification"]["duplicate_pairs"] == [[2, 6], [3, 7], [4, 8]]
