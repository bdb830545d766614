import pytest
from hypothesis import given, strategies as st

from collatzmat.numth import ord2
from collatzmat.tree import (
    StopReason,
    detect_row_cycle,
    f_step,
    is_knot,
    is_perfect_knot,
    is_unbranched,
    knot_position,
    row_structure,
    trajectory,
    tree_entry,
)

odd_small = st.integers(min_value=0, max_value=2_000).map(lambda k: 2 * k + 1)


def test_f_step():
    assert f_step(3, 5) == 16
    assert f_step(3, 16) == 8
    assert f_step(5, 7) == 36
    assert f_step(7, 1) == 8
    assert f_step(3, 2) == 1


@given(odd_small, st.integers(min_value=1, max_value=10**9))
def test_f_step_parity(a, n):
    out = f_step(a, n)
    if n % 2 == 0:
        assert out == n // 2
    else:
        assert out == a * n + 1
        assert out % 2 == 0


def test_trajectory_cycle_detected_before_reached_one():
    # 1 -> 4 -> 2 -> 1 revisits the start, which counts as a cycle even
    # though the revisited value is 1.
    values, reason = trajectory(3, 1, 100)
    assert values == [1, 4, 2, 1]
    assert reason is StopReason.CYCLE_DETECTED


def test_trajectory_reached_one():
    values, reason = trajectory(3, 7, 100)
    assert reason is StopReason.REACHED_ONE
    assert values[0] == 7
    assert values[-1] == 1
    assert len(values) == 17


def test_trajectory_budget_exhausted():
    values, reason = trajectory(5, 7, 3)
    assert values == [7, 36, 18, 9]
    assert reason is StopReason.STEP_BUDGET_EXHAUSTED


@given(st.integers(min_value=2, max_value=50_000))
def test_trajectory_3n1_reaches_one(start):
    values, reason = trajectory(3, start, 5_000)
    assert reason is StopReason.REACHED_ONE
    assert values[-1] == 1
    # each step is a valid application of the map
    for prev, cur in zip(values, values[1:]):
        assert cur == f_step(3, prev)


@given(odd_small, st.integers(min_value=1, max_value=999), st.integers(min_value=1, max_value=50))
def test_trajectory_respects_budget(a, start, budget):
    values, reason = trajectory(a, start, budget)
    assert len(values) <= budget + 1
    if reason is StopReason.STEP_BUDGET_EXHAUSTED:
        assert len(values) == budget + 1


def test_tree_entry():
    # column 0 holds the row's knot, column 1 the odd generator itself,
    # column c >= 2 the value 2**(c-1) * b.
    assert tree_entry(3, 1, 0) == 4
    assert tree_entry(3, 1, 1) == 1
    assert tree_entry(3, 1, 2) == 2
    assert tree_entry(7, 2, 0) == 22
    assert tree_entry(7, 2, 1) == 3
    assert tree_entry(7, 2, 4) == 24


@given(odd_small, st.integers(min_value=1, max_value=500), st.integers(min_value=2, max_value=40))
def test_tree_entry_doubling(a, row, col):
    assert tree_entry(a, row, col) == tree_entry(a, row, 1) * (1 << (col - 1))
    assert tree_entry(a, row, 1) == 2 * row - 1


def test_is_knot():
    assert is_knot(7, 22)
    assert is_knot(7, 8)
    assert not is_knot(7, 16)  # (16-1)/7 is not an integer
    assert not is_knot(3, 5)  # odd values are never knots
    assert not is_knot(3, 2)  # (2-1)/3 is not an integer
    # for a = 3 every even v == 1 (mod 3) qualifies: v-1 is odd, so the
    # generator (v-1)/3 is automatically odd
    assert is_knot(3, 4)
    assert is_knot(3, 10)
    assert is_knot(3, 16)
    assert is_knot(3, 22)
    assert is_knot(1, 2)


@given(odd_small, odd_small)
def test_knot_from_generator(a, g):
    # every odd generator produces a knot value g*a + 1
    v = g * a + 1
    assert is_knot(a, v)


def test_is_unbranched():
    # residues outside the subgroup generated by 2 (including gcd > 1)
    assert [b for b in range(1, 15, 2) if is_unbranched(7, b)] == [3, 5, 7, 13]
    assert [b for b in range(1, 7, 2) if is_unbranched(3, b)] == [3]
    assert not is_unbranched(1, 5)


def test_is_perfect_knot():
    assert is_perfect_knot(7, 22)  # generator 3 lies in an unbranched row
    assert not is_perfect_knot(7, 8)  # generator 1 is branched
    assert is_perfect_knot(3, 10)
    assert not is_perfect_knot(3, 4)


def test_knot_position():
    assert knot_position(3, 1) == 2
    assert knot_position(3, 5) == 1
    assert knot_position(7, 1) == 3
    assert knot_position(7, 11) == 1
    assert knot_position(1, 1) == 1
    assert knot_position(7, 3) is None
    assert knot_position(7, 5) is None


@given(odd_small, odd_small)
def test_knot_position_is_minimal_solution(a, b):
    j = knot_position(a, b)
    if j is None:
        assert is_unbranched(a, b)
        return
    assert 1 <= j <= ord2(a)
    if a > 1:
        assert (pow(2, j, a) * b) % a == 1
        for s in range(1, j):
            assert (pow(2, s, a) * b) % a != 1


def test_detect_row_cycle():
    # row 1 of f_a loops back onto itself when the knot a+1 is a power of 2
    assert detect_row_cycle(3, 1) == 2
    assert detect_row_cycle(7, 1) == 3
    assert detect_row_cycle(31, 1) == 5
    assert detect_row_cycle(5, 1) is None
    assert detect_row_cycle(3, 5) is None


def test_row_structure():
    r = row_structure(7, 1)
    assert (r.a, r.b, r.knot_col) == (7, 1, 3)
    assert not r.unbranched
    r = row_structure(7, 3)
    assert r.knot_col is None
    assert r.unbranched
    r = row_structure(3, 5)
    assert r.knot_col == 1
    assert not r.unbranched
