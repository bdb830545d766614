"""The infinite tree matrix of f_a, addressed lazily — never materialized.

Row i holds the odd number b = 2i - 1.  Column 0 is the knot column (the odd
step b*a + 1), column 1 is b itself, and column c >= 2 holds the doubled
values 2**(c-1) * b.  A knot is an even value c*a + 1 with c odd; a row is
unbranched when no j >= 1 solves 2**j * b == 1 (mod a), which happens exactly
when b's residue lies outside the subgroup generated by 2 (in particular
whenever gcd(b, a) > 1).  All predicates are O(ord2(a)) arithmetic on the
indices, so they work at any depth of the tree.
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from collatzmat.numth import pow2_chain, _require_odd


class TreeAddress(NamedTuple):
    """Grid coordinates: row >= 1 (holding b = 2*row - 1), col >= 0."""

    row: int
    col: int


@dataclass(frozen=True)
class RowStructure:
    """One row's branching summary for a given modulus a.

    knot_col is the minimal j >= 1 with 2**j * b == 1 (mod a), or None for an
    unbranched row; when present it never exceeds ord2(a).
    """

    a: int
    b: int
    knot_col: Optional[int]

    @property
    def unbranched(self) -> bool:
        return self.knot_col is None


class StopReason(enum.Enum):
    REACHED_ONE = "ReachedOne"
    CYCLE_DETECTED = "CycleDetected"
    STEP_BUDGET_EXHAUSTED = "StepBudgetExhausted"


def f_step(a: int, n: int) -> int:
    """One application of f_a: halve even n, send odd n to a*n + 1."""
    _require_odd(a, "f_step")
    if n < 1:
        raise ValueError(f"f_step requires n >= 1, got {n}")
    return n // 2 if n % 2 == 0 else a * n + 1


def trajectory(a: int, start: int, max_steps: int) -> tuple[list[int], StopReason]:
    """Iterate f_a from start, stopping on a revisit, on reaching 1, or on budget.

    The revisit check runs before the reached-one check so that orbits entering
    a cycle through 1 (e.g. start = 1 itself) report CycleDetected.
    """
    _require_odd(a, "trajectory")
    if start < 1:
        raise ValueError(f"trajectory requires start >= 1, got {start}")
    if max_steps < 1:
        raise ValueError(f"trajectory requires max_steps >= 1, got {max_steps}")
    seq = [start]
    seen = {start}
    for _ in range(max_steps):
        nxt = f_step(a, seq[-1])
        seq.append(nxt)
        if nxt in seen:
            return seq, StopReason.CYCLE_DETECTED
        if nxt == 1:
            return seq, StopReason.REACHED_ONE
        seen.add(nxt)
    return seq, StopReason.STEP_BUDGET_EXHAUSTED


def tree_entry(a: int, row: int, col: int) -> int:
    """Value at (row, col): b*a+1 in column 0, b in column 1, 2**(col-1)*b beyond."""
    _require_odd(a, "tree_entry")
    if row < 1:
        raise ValueError(f"tree_entry requires row >= 1, got {row}")
    if col < 0:
        raise ValueError(f"tree_entry requires col >= 0, got {col}")
    b = 2 * row - 1
    if col == 0:
        return b * a + 1
    if col == 1:
        return b
    return (1 << (col - 1)) * b


def is_knot(a: int, v: int) -> bool:
    """True iff v is a knot for a: even, v == 1 (mod a), and (v-1)/a odd.

    The oddness of (v-1)/a is automatic for even v and odd a but is asserted
    anyway to keep the definition honest.
    """
    _require_odd(a, "is_knot")
    if v < 1:
        raise ValueError(f"is_knot requires v >= 1, got {v}")
    if v % 2 != 0 or (v - 1) % a != 0:
        return False
    return ((v - 1) // a) % 2 == 1


def knot_position(a: int, b: int) -> Optional[int]:
    """Minimal j >= 1 with 2**j * b == 1 (mod a), or None when no j exists.

    Solvable exactly when b's residue sits in the subgroup generated by 2
    modulo a; the position falls out of the doubling chain: if b == 2**t
    (mod a) then j = ord2(a) - t (with t = 0 giving j = ord2(a)).
    """
    _require_odd(a, "knot_position")
    _require_odd(b, "knot_position")
    if a == 1:
        return 1
    chain = pow2_chain(a)
    r = b % a
    try:
        t = chain.index(r)
    except ValueError:
        return None
    return len(chain) - t if t else len(chain)


def is_unbranched(a: int, b: int) -> bool:
    """True iff row of b carries no knot (knot_position is absent)."""
    return knot_position(a, b) is None


def is_perfect_knot(a: int, k: int) -> bool:
    """True iff k is a knot whose generator (k-1)/a sits in an unbranched row."""
    _require_odd(a, "is_perfect_knot")
    if k < 2:
        raise ValueError(f"is_perfect_knot requires k >= 2, got {k}")
    if not is_knot(a, k):
        return False
    return is_unbranched(a, (k - 1) // a)


def detect_row_cycle(a: int, b: int) -> Optional[int]:
    """j with a*b + 1 == 2**j * b when the row's knot value recurs in the row.

    The recurrence certifies the cycle b -> a*b+1 -> ... -> b; it happens
    exactly for b = 1 with a + 1 a power of two (a a Mersenne number).
    """
    _require_odd(a, "detect_row_cycle")
    _require_odd(b, "detect_row_cycle")
    knot = a * b + 1
    if knot % b != 0:
        return None
    m = knot // b
    if m < 2 or m & (m - 1):
        return None
    return m.bit_length() - 1


def row_structure(a: int, b: int) -> RowStructure:
    """The RowStructure record for the row holding the odd number b."""
    return RowStructure(a=a, b=b, knot_col=knot_position(a, b))
