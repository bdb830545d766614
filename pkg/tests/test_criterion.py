from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from collatzmat.criterion import (
    NumberClass,
    classify_number,
    criterion_holds,
    pseudoprime_scan,
    rank,
    rank_frequency,
    rank_members,
    rank_symmetry_scan,
)
from collatzmat.numth import fermat_base2_holds, is_prime, ord2

from reference_data import TABLE2, TABLE4

odd_3up = st.integers(min_value=1, max_value=50_000).map(lambda k: 2 * k + 1)


@given(odd_3up)
def test_criterion_is_divisibility(a):
    assert criterion_holds(a) == ((a - 1) % ord2(a) == 0)


@given(odd_3up)
def test_criterion_matches_fermat(a):
    assert criterion_holds(a) == fermat_base2_holds(a)


def _pair(r):
    return (r.numerator, r.denominator)


def test_rank_values():
    assert _pair(rank(3)) == (2, 2)
    assert _pair(rank(7)) == (6, 3)
    assert _pair(rank(31)) == (30, 5)
    assert _pair(rank(2047)) == (2046, 11)
    r = rank(49)
    assert (r.numerator, r.denominator) == (48, 21)
    assert r.value == Fraction(48, 21)
    assert not r.is_integer
    assert rank(7).is_integer


def test_rank_rejects_small():
    with pytest.raises(ValueError):
        rank(1)
    with pytest.raises(ValueError):
        criterion_holds(1)


def test_classify_number():
    assert classify_number(1) == NumberClass.UNIT
    assert classify_number(7) == NumberClass.PRIME
    assert classify_number(31) == NumberClass.PRIME
    assert classify_number(341) == NumberClass.PSEUDOPRIME_BASE2
    assert classify_number(9) == NumberClass.COMPOSITE_FAIL
    assert classify_number(2047) == NumberClass.PSEUDOPRIME_BASE2


def test_classify_number_strings():
    assert NumberClass.UNIT == "Unit"
    assert NumberClass.PRIME == "Prime"
    assert NumberClass.PSEUDOPRIME_BASE2 == "PseudoprimeBase2"
    assert NumberClass.COMPOSITE_FAIL == "CompositeFail"


def test_integer_ranks_from_reference():
    for a, (label, rank_str) in TABLE2.items():
        if label != "Prime":
            continue
        r = rank(a)
        assert r.is_integer
        assert str(r.numerator // r.denominator) == rank_str


def test_rank_frequency_small_bound_oracle():
    # recount with plain pow/ord loops, independent of the batch kernels
    freq = rank_frequency(10_000, 18)
    expected = {r: 0 for r in range(1, 19)}
    for a in range(3, 10_000, 2):
        if not is_prime(a):
            continue
        t = ord2(a)
        if (a - 1) % t == 0 and (a - 1) // t <= 18:
            expected[(a - 1) // t] += 1
    assert freq == expected


def test_rank_members_consistent_with_frequency():
    freq = rank_frequency(10_000, 6)
    members = rank_members(10_000, {1, 4, 6})
    for r in (1, 4, 6):
        assert len(members[r]) == freq[r]
        for p in members[r]:
            assert is_prime(p)
            assert (p - 1) // ord2(p) == r


def test_pseudoprime_scan_prefix():
    records = pseudoprime_scan(600)
    assert [r.a for r in records] == [341, 561]


def test_pseudoprime_scan_full_reference():
    records = pseudoprime_scan(5461)
    assert len(records) == 17
    for rec in records:
        n_c, m_l, n_l, rk = TABLE4[rec.a]
        assert rec.m_c == rec.a
        assert rec.n_c == n_c
        assert (rec.m_l, rec.n_l) == (m_l, n_l)
        assert rec.rank_num // rec.rank_den == rk
        assert rec.number_class == NumberClass.PSEUDOPRIME_BASE2


def test_rank_symmetry_scan():
    report = rank_symmetry_scan(2001)
    assert report.counterexamples == []
