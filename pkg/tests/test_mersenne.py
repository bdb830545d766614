import pytest

from collatzmat.mersenne import (
    exponent_frequencies,
    is_singular,
    mersenne_number_is_prime,
    nc_count_bounded,
    nc_count_exact,
    singularity_check,
    singularity_report,
)
from collatzmat.numth import ord2

from reference_data import (
    MERSENNE_PRIME_EXPONENTS,
    SINGULAR_EXPONENTS,
    WITNESSES_N11,
)


def test_mersenne_number_is_prime():
    got = [n for n in range(1, 32) if mersenne_number_is_prime(n)]
    assert got == MERSENNE_PRIME_EXPONENTS


def test_nc_count_bounded_n11():
    assert nc_count_bounded(11, 1_999_999) == (3, WITNESSES_N11)


def test_nc_count_bounded_small():
    # brute recount for a tiny case: odd a <= 1001 with ord2(a) == 6
    count, witnesses = nc_count_bounded(6, 1001)
    expected = [a for a in range(1, 1002, 2) if ord2(a) == 6]
    assert witnesses == expected
    assert count == len(expected)


def test_nc_count_exact_small():
    assert nc_count_exact(1) == (1, [1])
    assert nc_count_exact(2) == (1, [3])
    assert nc_count_exact(11) == (3, WITNESSES_N11)
    count, witnesses = nc_count_exact(18)
    assert count == 24
    assert witnesses[-1] == 2**18 - 1
    for a in witnesses:
        assert (2**18 - 1) % a == 0
        assert ord2(a) == 18


def test_exact_matches_bounded_when_bound_covers():
    for n in range(1, 20):
        exact_count, exact_witnesses = nc_count_exact(n)
        bounded_count, bounded_witnesses = nc_count_bounded(n, 1_999_999)
        in_range = [a for a in exact_witnesses if a <= 1_999_999]
        assert bounded_witnesses == in_range
        assert bounded_count == len(in_range)
        assert exact_count == len(exact_witnesses)


def test_is_singular_window():
    got = [n for n in range(2, 32) if is_singular(n)]
    assert got == [n for n in SINGULAR_EXPONENTS if n >= 2]


def test_singular_iff_mersenne_prime_for_primes():
    from collatzmat.numth import is_prime

    for n in range(2, 32):
        if is_prime(n):
            assert is_singular(n) == mersenne_number_is_prime(n)
        else:
            assert not is_singular(n)


def test_singularity_report_n11():
    rep = singularity_report(11)
    assert rep.n == 11
    assert rep.count == 3
    assert rep.witnesses == WITNESSES_N11
    assert not rep.singular
    assert not rep.mersenne_prime


def test_singularity_check_31():
    check = singularity_check(31)
    assert check.singular_exponents == SINGULAR_EXPONENTS
    assert check.necessity_violations == []
    assert check.converse_notes == [1]
    assert check.failures == {}


def test_exponent_frequencies_matches_bounded():
    freqs = exponent_frequencies(8, 10_001)
    for n in range(1, 9):
        assert freqs[n] == nc_count_bounded(n, 10_001)


def test_rejects_bad_exponent():
    with pytest.raises(ValueError):
        nc_count_exact(0)
    with pytest.raises(ValueError):
        is_singular(-3)
