"""The divisibility criterion (m_C - 1) mod n_C == 0 and what it separates.

For the standard matrix of f_a this reads ord2(a) | a - 1, which holds exactly
when 2**(a-1) == 1 (mod a) — i.e. for primes and base-2 Fermat pseudoprimes.
classify_number asserts that equivalence at runtime on every call.  The rank
(m_C - 1)/n_C is kept as an exact rational pair; it is an integer precisely
when the criterion holds.  Scans here produce the rank-frequency table over
primes, the classified-pseudoprime table, and the rank/symmetry-flag checks.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from collatzmat.matrices import little_shape
from collatzmat.numth import (
    _require_odd,
    fermat_base2_holds,
    is_prime,
    ord2,
    ord2_batch,
    primes_below,
)
from collatzmat.symmetry import pattern_flags


@dataclass(frozen=True)
class Rank:
    """Exact rank (m_C - 1)/n_C: the raw pair plus its lowest-terms value."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_integer(self) -> bool:
        return self.numerator % self.denominator == 0


class NumberClass:
    UNIT = "Unit"
    PRIME = "Prime"
    PSEUDOPRIME_BASE2 = "PseudoprimeBase2"
    COMPOSITE_FAIL = "CompositeFail"


@dataclass(frozen=True)
class RankSymmetryReport:
    """Result of rank_symmetry_scan: expected-empty counterexample list."""

    a_max: int
    counterexamples: list[tuple[str, int]]


def criterion_holds(a: int) -> bool:
    """True iff (a - 1) mod ord2(a) == 0."""
    _require_odd(a, "criterion_holds")
    if a < 3:
        raise ValueError(f"criterion_holds requires a >= 3, got {a}")
    return (a - 1) % ord2(a) == 0


def rank(a: int) -> Rank:
    """The exact rank (a - 1)/ord2(a) as a Rank record."""
    _require_odd(a, "rank")
    if a < 3:
        raise ValueError(f"rank requires a >= 3, got {a}")
    return Rank(numerator=a - 1, denominator=ord2(a))


def classify_number(a: int) -> str:
    """Unit, Prime, PseudoprimeBase2, or CompositeFail for odd a >= 1.

    Also asserts the provable equivalence between the order-divisibility
    criterion and the base-2 Fermat condition; a failure would mean a broken
    arithmetic primitive, so it raises rather than returning anything.
    """
    _require_odd(a, "classify_number")
    if a == 1:
        return NumberClass.UNIT
    holds = criterion_holds(a)
    if holds != fermat_base2_holds(a):
        raise RuntimeError(
            f"divisibility criterion and Fermat base-2 test disagree at a={a}"
        )
    if is_prime(a):
        return NumberClass.PRIME
    return NumberClass.PSEUDOPRIME_BASE2 if holds else NumberClass.COMPOSITE_FAIL


def rank_frequency(bound: int, max_rank: int) -> dict[int, int]:
    """Count primes p <= bound by integer rank (p - 1)/ord2(p), ranks 1..max_rank.

    Every prime has an integer rank (Fermat), so this is a partition of the
    odd primes up to the bound, truncated to the requested rank range.
    Composites are excluded by construction; the pseudoprime scan below covers
    the composite criterion-holders separately.
    """
    if bound < 3:
        raise ValueError(f"rank_frequency requires bound >= 3, got {bound}")
    if max_rank < 1:
        raise ValueError(f"rank_frequency requires max_rank >= 1, got {max_rank}")
    primes = primes_below(bound + 1)
    primes = primes[primes > 2]
    orders = ord2_batch(primes)
    counts = dict.fromkeys(range(1, max_rank + 1), 0)
    for p, n in zip(primes.tolist(), orders.tolist()):
        if (p - 1) % n:
            raise RuntimeError(f"prime {p} has non-integer rank ({p - 1})/{n}")
        r = (p - 1) // n
        if r <= max_rank:
            counts[r] += 1
    return counts


def rank_members(bound: int, target_ranks: set[int]) -> dict[int, list[int]]:
    """The primes p <= bound whose rank lands in target_ranks, per rank.

    A prime has rank r exactly when ord2(p) == (p - 1)/r, which requires
    2**((p-1)/r) == 1 (mod p).  That necessary condition (one modular power
    per divisible (p, r) pair) prunes the candidates first; the survivors'
    exact orders then come from the batch kernel, so the expensive scan
    touches only a small slice of the primes.
    """
    members: dict[int, list[int]] = {r: [] for r in sorted(target_ranks)}
    if not members:
        return members
    primes = primes_below(bound + 1)
    candidates = [
        p
        for p in primes[primes > 2].tolist()
        if any(
            (p - 1) % r == 0 and pow(2, (p - 1) // r, p) == 1 for r in members
        )
    ]
    if not candidates:
        return members
    orders = ord2_batch(np.asarray(candidates, dtype=np.int64))
    for p, n in zip(candidates, orders.tolist()):
        r = (p - 1) // n
        if r in members:
            members[r].append(p)
    return members


def pseudoprime_scan(bound: int) -> list:
    """ScanRecords for every odd composite a <= bound passing the criterion.

    The base-2 Fermat condition filters candidates first (one modular power
    per odd a), and full records are built only for the survivors.
    """
    if bound < 3:
        raise ValueError(f"pseudoprime_scan requires bound >= 3, got {bound}")
    from collatzmat.records import scan_record

    records = []
    for a in range(3, bound + 1, 2):
        if pow(2, a - 1, a) != 1 or is_prime(a):
            continue
        records.append(scan_record(a))
    return records


def rank_symmetry_scan(a_max: int) -> RankSymmetryReport:
    """Check the rank/flag propositions for every odd 3 <= a <= a_max.

    Rules (against raw pattern flags, not exclusive labels): rank 1 implies
    the sm flag; rank 2 with odd n_C implies the imm flag; m_L = 1 implies
    the um flag.  Counterexamples (expected none) come back sorted.
    """
    if a_max < 3:
        raise ValueError(f"rank_symmetry_scan requires a_max >= 3, got {a_max}")
    odds = list(range(3, a_max + 1, 2))
    orders = ord2_batch(odds).tolist()
    counterexamples: list[tuple[str, int]] = []
    for a, n in zip(odds, orders):
        flags = pattern_flags(a)
        if (a - 1) % n == 0:
            r = (a - 1) // n
            if r == 1 and not flags.sm:
                counterexamples.append(("rank1-not-sm", a))
            if r == 2 and n % 2 == 1 and not flags.imm:
                counterexamples.append(("rank2-oddn-not-imm", a))
        if little_shape(a).m_l == 1 and not flags.um:
            counterexamples.append(("littlerow1-not-um", a))
    counterexamples.sort(key=lambda item: (item[1], item[0]))
    return RankSymmetryReport(a_max=a_max, counterexamples=counterexamples)
