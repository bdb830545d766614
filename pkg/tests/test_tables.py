import csv
import io
import json

import pytest

from collatzmat.numth import is_prime, ord2
from collatzmat.tables import emit_table, rank_display, table_rows

from reference_data import TABLE1, TABLE2, TABLE4, TABLE5

INT_RANKS = {a: int(s) for a, (_, s) in TABLE2.items() if "." not in s}


def test_rank_display():
    assert rank_display(0, 1) == "0"
    assert rank_display(2, 2) == "1"
    assert rank_display(6, 3) == "2"
    assert rank_display(8, 6) == "1.333"
    assert rank_display(14, 4) == "3.5"
    assert rank_display(24, 20) == "1.2"
    assert rank_display(32, 10) == "3.2"
    assert rank_display(50, 8) == "6.25"
    # truncation, not rounding: 48/21 = 2.2857...
    assert rank_display(48, 21) == "2.285"
    assert rank_display(44, 12) == "3.666"


def test_table1_rows():
    headers, rows = table_rows(1)
    assert headers == ["a", "m_C", "n_C", "m_L", "n_L", "m_B", "n_B", "symmetry"]
    assert len(rows) == 31
    for row in rows:
        assert tuple(row[1:]) == TABLE1[row[0]]


def test_table2_rows():
    headers, rows = table_rows(2)
    assert headers == ["a", "label", "m_C", "n_C", "rank"]
    assert len(rows) == 26
    for a, label, m_c, n_c, rank_str in rows:
        expected_label, expected_rank = TABLE2[a]
        assert label == expected_label
        assert (m_c, n_c) == TABLE1[a][:2]
        # historical rank strings were cut at two or three decimals; ours
        # always shows three, so match on the historical prefix
        assert rank_str.startswith(expected_rank)


def test_table3_small_bound_oracle():
    headers, rows = table_rows(3, bound=10_000)
    assert headers == ["rank", "frequency"]
    assert [r for r, _ in rows] == list(range(1, 19))
    expected = {r: 0 for r in range(1, 19)}
    for a in range(3, 10_000, 2):
        if is_prime(a) and (a - 1) % ord2(a) == 0 and (a - 1) // ord2(a) <= 18:
            expected[(a - 1) // ord2(a)] += 1
    assert dict(rows) == expected


def test_table4_rows():
    headers, rows = table_rows(4)
    assert headers == ["a", "m_C", "n_C", "m_L", "n_L", "rank"]
    assert [row[0] for row in rows] == sorted(TABLE4)
    for a, m_c, n_c, m_l, n_l, rank_str in rows:
        ref_n_c, ref_m_l, ref_n_l, ref_rank = TABLE4[a]
        assert m_c == a
        assert (n_c, m_l, n_l) == (ref_n_c, ref_m_l, ref_n_l)
        assert rank_str == str(ref_rank)


def test_table5_rows():
    headers, rows = table_rows(5)
    assert headers == ["n", "frequency"]
    assert dict(rows) == TABLE5


def test_table5_small_bound():
    _, rows = table_rows(5, bound=8)
    assert [n for n, _ in rows] == list(range(1, 9))
    assert dict(rows) == {n: TABLE5[n] for n in range(1, 9)}


def test_csv_emission_parses_back():
    text = emit_table(1, fmt="csv")
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == ["a", "m_C", "n_C", "m_L", "n_L", "m_B", "n_B", "symmetry"]
    assert len(parsed) == 32
    row43 = next(r for r in parsed if r[0] == "43")
    assert row43 == ["43", "43", "14", "6", "2", "1849", "602", "MM"]


def test_json_emission():
    payload = json.loads(emit_table(2, fmt="json"))
    assert [r["a"] for r in payload] == sorted(TABLE2)
    row9 = next(r for r in payload if r["a"] == 9)
    assert row9["rank"].startswith("1.333")
    assert row9["label"] == ""


def test_markdown_emission():
    text = emit_table(5, fmt="markdown")
    lines = text.splitlines()
    assert lines[0] == "| n | frequency |"
    assert set(lines[1]) <= {"|", "-", " "}
    assert len(lines) == 2 + 19
    assert lines[2 + 15] == "| 16 | 8 |"
    assert lines[2 + 9] == "| 10 | 5 |"


def test_invalid_table():
    with pytest.raises(ValueError):
        table_rows(0)
    with pytest.raises(ValueError):
        table_rows(6)
    with pytest.raises(ValueError):
        emit_table(1, fmt="xml")
