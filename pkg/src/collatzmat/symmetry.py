"""Symmetry classes of the standard matrix's unbranched-row pattern.

With U the set of unbranched row indices and x = (m_C + 1)/2 the axis row
(which always lies in U for a >= 3):

* sm — U is exactly {x} (a single unbranched row in the middle);
* um — every row 2..x-1 above the axis is unbranched (vacuous when x <= 2);
* mm — the pattern is mirror-symmetric about the axis;
* imm — the pattern is anti-symmetric about the axis (every pair differs).

The exclusive label applies the first matching flag in the precedence
UM > SM > MM > IMM, else USM.  UM must precede SM because a matrix whose U is
exactly {axis} while all of 2..x-1 is vacuously unbranched (e.g. a = 3) is
labeled UM; this is the unique precedence reproducing the bundled summary
table.  The correlation scan checks the observed label/primality links: SM
and IMM occur only at primes, UM only at Mersenne numbers 2**k - 1.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from collatzmat.matrices import row_profile
from collatzmat.numth import _require_odd, is_prime

LABELS = ("SM", "UM", "MM", "IMM", "USM")


class PatternFlags(NamedTuple):
    sm: bool
    um: bool
    mm: bool
    imm: bool


class SymmetryClass(NamedTuple):
    label: str
    flags: PatternFlags


@dataclass(frozen=True)
class CorrelationReport:
    """Result of correlation_scan: expected-empty counterexamples plus tallies."""

    a_max: int
    counterexamples: list[tuple[str, int]]
    class_counts: dict[str, int]


def pattern_flags(a: int) -> PatternFlags:
    """The four raw symmetry flags of the unbranched-row pattern of f_a.

    All mirror quantifiers run over every pair k = 1..x-1 including the
    first/last rows; empty quantifier ranges (a = 1) come out vacuously true.
    """
    _require_odd(a, "pattern_flags")
    unbranched, _ = row_profile(a)
    x = (a + 1) // 2
    sm = bool(unbranched[x - 1]) and int(unbranched.sum()) == 1
    um = bool(unbranched[1 : x - 1].all()) if x >= 3 else True
    ks = np.arange(1, x)
    above = unbranched[x - 1 - ks]
    below = unbranched[x - 1 + ks]
    mm = bool((above == below).all())
    imm = bool((above != below).all())
    return PatternFlags(sm=sm, um=um, mm=mm, imm=imm)


def classify(a: int) -> SymmetryClass:
    """Exclusive label: first matching flag in UM > SM > MM > IMM, else USM."""
    _require_odd(a, "classify")
    flags = pattern_flags(a)
    if flags.um:
        label = "UM"
    elif flags.sm:
        label = "SM"
    elif flags.mm:
        label = "MM"
    elif flags.imm:
        label = "IMM"
    else:
        label = "USM"
    return SymmetryClass(label=label, flags=flags)


def _is_mersenne_number(a: int) -> bool:
    """True iff a == 2**k - 1 for some k >= 1."""
    return a & (a + 1) == 0


def correlation_scan(a_max: int) -> CorrelationReport:
    """Scan odd 1 <= a <= a_max for label/primality correlation violations.

    Checks per a: label SM implies a prime; label IMM implies a prime; label
    UM implies a is a Mersenne number (1 = 2**1 - 1 qualifies).
    Counterexamples (expected none) are returned sorted, alongside per-label
    counts.
    """
    if a_max < 3:
        raise ValueError(f"correlation_scan requires a_max >= 3, got {a_max}")
    counterexamples: list[tuple[str, int]] = []
    counts = {label: 0 for label in LABELS}
    for a in range(1, a_max + 1, 2):
        label = classify(a).label
        counts[label] += 1
        if label == "SM" and not is_prime(a):
            counterexamples.append(("SM-not-prime", a))
        elif label == "IMM" and not is_prime(a):
            counterexamples.append(("IMM-not-prime", a))
        elif label == "UM" and not _is_mersenne_number(a):
            counterexamples.append(("UM-not-mersenne", a))
    counterexamples.sort(key=lambda item: (item[1], item[0]))
    return CorrelationReport(
        a_max=a_max, counterexamples=counterexamples, class_counts=counts
    )
