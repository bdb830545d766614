"""The five bundled reproduction tables, computed from first principles.

Table 1 — shapes and symmetry labels for odd a up to 61;
Table 2 — standard shape and exact rank for odd a up to 51;
Table 3 — prime counts by rank 1..18 for primes up to 10**6;
Table 4 — classified base-2 pseudoprimes up to 5461;
Table 5 — bounded census of odd a per column count n = 1..19 (a <= 1,999,999).

Rows are plain value lists; csv, json, and markdown formatters share them.
Rank decimals are truncated (never rounded) to three places with trailing
zeros stripped, and the exact rational stays the source of truth.
"""

import json

from collatzmat.criterion import pseudoprime_scan, rank_frequency
from collatzmat.matrices import big_shape, little_shape, standard_shape
from collatzmat.mersenne import exponent_frequencies
from collatzmat.numth import is_prime
from collatzmat.symmetry import classify

TABLE_DEFAULTS = {1: 61, 2: 51, 3: 1_000_000, 4: 5461, 5: 19}
TABLE5_A_MAX = 1_999_999
FORMATS = ("csv", "json", "markdown")


def rank_display(num: int, den: int) -> str:
    """num/den as an integer, or truncated to three decimals (zeros stripped)."""
    q, rem = divmod(num, den)
    if rem == 0:
        return str(q)
    frac = (num * 1000) // den - q * 1000
    return f"{q}.{frac:03d}".rstrip("0")


def table_rows(table_id: int, bound: int | None = None) -> tuple[list[str], list[list]]:
    """(headers, rows) for one reproduction table."""
    if table_id not in TABLE_DEFAULTS:
        raise ValueError(f"table id must be 1..5, got {table_id}")
    if bound is None:
        bound = TABLE_DEFAULTS[table_id]
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")

    if table_id == 1:
        headers = ["a", "m_C", "n_C", "m_L", "n_L", "m_B", "n_B", "symmetry"]
        rows = []
        for a in range(1, bound + 1, 2):
            m_c, n_c = standard_shape(a)
            m_l, n_l = little_shape(a)
            m_b, n_b = big_shape(a)
            rows.append([a, m_c, n_c, m_l, n_l, m_b, n_b, classify(a).label])
        return headers, rows

    if table_id == 2:
        headers = ["a", "label", "m_C", "n_C", "rank"]
        rows = []
        for a in range(1, bound + 1, 2):
            m_c, n_c = standard_shape(a)
            label = "Prime" if is_prime(a) else ""
            rows.append([a, label, m_c, n_c, rank_display(m_c - 1, n_c)])
        return headers, rows

    if table_id == 3:
        headers = ["rank", "frequency"]
        counts = rank_frequency(bound, 18)
        return headers, [[r, counts[r]] for r in range(1, 19)]

    if table_id == 4:
        headers = ["a", "m_C", "n_C", "m_L", "n_L", "rank"]
        rows = []
        for rec in pseudoprime_scan(bound):
            rows.append(
                [
                    rec.a,
                    rec.m_c,
                    rec.n_c,
                    rec.m_l,
                    rec.n_l,
                    rank_display(rec.rank_num, rec.rank_den),
                ]
            )
        return headers, rows

    headers = ["n", "frequency"]
    census = exponent_frequencies(bound, TABLE5_A_MAX)
    return headers, [[n, census[n][0]] for n in range(1, bound + 1)]


def format_csv(headers: list[str], rows: list[list]) -> str:
    lines = [",".join(headers)]
    lines.extend(",".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def format_json(headers: list[str], rows: list[list]) -> str:
    payload = [dict(zip(headers, row)) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def format_markdown(headers: list[str], rows: list[list]) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    lines.extend("| " + " | ".join(str(cell) for cell in row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def emit_table(table_id: int, bound: int | None = None, fmt: str = "csv") -> str:
    """Render one table in csv, json, or markdown."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    headers, rows = table_rows(table_id, bound)
    if fmt == "csv":
        return format_csv(headers, rows)
    if fmt == "json":
        return format_json(headers, rows)
    return format_markdown(headers, rows)
