"""Shared test utilities: reference-table loading and numeric parsing."""

import json
import pathlib

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "golden"


def parse_printed(text):
    """Parse one printed numeric field; accepts Fortran D exponents."""
    return float(text.strip().replace("D", "E").replace("d", "e"))


def parse_entry(pair):
    return complex(parse_printed(pair[0]), parse_printed(pair[1]))


def load_golden(name):
    doc = json.loads((GOLDEN_DIR / name).read_text())
    matrices = {label: tuple(parse_entry(e) for e in rows)
                for label, rows in doc["matrices"].items()}
    return doc, matrices


def golden_matrices(degree, convention):
    _, matrices = load_golden(f"degree{degree}_{convention}.json")
    return matrices


def max_table_deviation(degree, convention, generators, labels, base=1):
    """Largest per-entry absolute deviation of computed matrices from a table."""
    table = golden_matrices(degree, convention)
    worst = 0.0
    for lbl, m in zip(labels, generators):
        ref = table[f"S{base}S{lbl}"]
        got = (m.a, m.b, m.c, m.d)
        worst = max(worst, max(abs(g - r) for g, r in zip(got, ref)))
    return worst
