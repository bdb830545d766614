from hypothesis import given, strategies as st

from collatzmat.numth import is_prime
from collatzmat.symmetry import LABELS, classify, correlation_scan, pattern_flags

from reference_data import TABLE1, TABLE1_SYMMETRY_TALLY

odd_small = st.integers(min_value=0, max_value=2_500).map(lambda k: 2 * k + 1)


def test_labels():
    assert LABELS == ("SM", "UM", "MM", "IMM", "USM")


def test_classify_against_reference():
    for a, row in TABLE1.items():
        assert classify(a).label == row[6], a


def test_classify_one_is_um():
    # the 1x1 matrix has no interior rows, so the upper condition holds
    # vacuously and 1 = 2**1 - 1 fits the Mersenne pattern
    assert classify(1).label == "UM"


def test_pattern_flags_a7():
    flags = pattern_flags(7)
    assert flags.um
    assert flags.imm
    assert not flags.sm


def test_pattern_flags_known_values():
    assert pattern_flags(5).sm
    assert not pattern_flags(5).um
    assert pattern_flags(9).mm
    assert pattern_flags(23).imm
    assert not any(pattern_flags(21))  # USM: no flag set


@given(odd_small)
def test_precedence(a):
    flags = pattern_flags(a)
    label = classify(a).label
    if flags.um:
        assert label == "UM"
    elif flags.sm:
        assert label == "SM"
    elif flags.mm:
        assert label == "MM"
    elif flags.imm:
        assert label == "IMM"
    else:
        assert label == "USM"


@given(odd_small)
def test_sm_iff_unique_unbranched_axis(a):
    # single-matrix means the axis row is the only unbranched row
    import numpy as np

    from collatzmat.matrices import row_profile

    unbranched, _ = row_profile(a)
    axis = (a + 1) // 2
    rows = {int(i) + 1 for i in np.flatnonzero(unbranched)}
    assert pattern_flags(a).sm == (rows == {axis})


def test_correlation_scan_reference_tally():
    report = correlation_scan(61)
    assert report.counterexamples == []
    assert report.class_counts == TABLE1_SYMMETRY_TALLY


def test_correlation_scan_medium():
    report = correlation_scan(2001)
    assert report.counterexamples == []
    # spot the prime correlations directly
    for a in range(1, 2002, 2):
        label = classify(a).label
        if label in ("SM", "IMM"):
            assert is_prime(a), (a, label)
        if label == "UM":
            assert (a + 1) & a == 0, a  # Mersenne number
