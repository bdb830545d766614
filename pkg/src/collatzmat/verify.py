"""Verification suites behind `verify --suite ...` and the acceptance tests.

Each suite runs a battery of exact checks and returns a SuiteResult carrying
human-readable summary lines plus a flattened list of violations; an empty
violation list is the expected outcome for every suite.  The checks favor
independent arithmetic over the code paths they audit: modular powers verify
the order-divisibility identities, direct per-value predicates re-derive the
big-window perfect-knot pattern, and the Fermat/Lucas-Lehmer oracles sit on
the other side of every criterion comparison.
"""

from dataclasses import dataclass, field

import numpy as np

from collatzmat.criterion import rank_symmetry_scan
from collatzmat.matrices import row_profile, structure_bitmap
from collatzmat.mersenne import singularity_check
from collatzmat.numth import odd_part, ord2_batch, v2
from collatzmat.symmetry import correlation_scan
from collatzmat.tree import is_perfect_knot

SUITES = ("invariants", "conjecture1", "symmetry", "rank-symmetry", "kaiser")
DEFAULT_BOUNDS = {
    "invariants": 2001,
    "conjecture1": 100_000,
    "symmetry": 20_001,
    "rank-symmetry": 20_001,
    "kaiser": 31,
}


@dataclass
class SuiteResult:
    suite: str
    bound: int
    lines: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check(result: SuiteResult, name: str, bad: list) -> None:
    if bad:
        shown = ", ".join(str(b) for b in bad[:10])
        more = "" if len(bad) <= 10 else f" (+{len(bad) - 10} more)"
        result.violations.append(f"{name}: {shown}{more}")
        result.lines.append(f"FAIL {name}: {len(bad)} violation(s)")
    else:
        result.lines.append(f"ok   {name}")


def verify_invariants(
    window_bound: int = 2001,
    ident_bound: int = 100_000,
    big_bound: int = 25,
) -> SuiteResult:
    """Structural invariants of the three windows.

    Arithmetic identities run to ident_bound, per-window structure checks to
    window_bound, and the big-window perfect-knot checks (which re-derive the
    pattern from materialized entries) to big_bound.
    """
    result = SuiteResult(suite="invariants", bound=window_bound)

    odds = np.arange(3, ident_bound + 1, 2, dtype=np.int64)
    orders = ord2_batch(odds)
    bad = [int(a) for a, n in zip(odds, orders) if pow(2, int(n), int(a)) != 1]
    _check(result, f"(2**n_C - 1) mod m_C == 0 for odd a <= {ident_bound}", bad)
    bad = [int(a) for a, n in zip(odds, orders) if not int(a) > int(n)]
    _check(result, f"m_C > n_C for odd a <= {ident_bound}", bad)

    bad = []
    for a in range(1, ident_bound + 1, 2):
        n_l = v2(a + 1)
        m_l = (odd_part(a + 1) + 1) // 2
        if 1 + a + (1 << n_l) != m_l * (1 << (n_l + 1)):
            bad.append(a)
    _check(result, f"little identity (1+m_C+2**n_L) == m_L*2**(n_L+1), a <= {ident_bound}", bad)

    one_knot_bad, count_bad, first_bad, axis_bad, period_bad = [], [], [], [], []
    window_odds = np.arange(3, window_bound + 1, 2, dtype=np.int64)
    window_orders = ord2_batch(window_odds)
    for a, order in zip(window_odds.tolist(), window_orders.tolist()):
        unbranched, knots = row_profile(a)
        branch_cols = knots[~unbranched]
        counts = np.bincount(branch_cols, minlength=order + 1)[1:]
        if counts.size != order or not (counts == 1).all():
            one_knot_bad.append(a)
        if int(unbranched.sum()) != a - order:
            count_bad.append(a)
        if unbranched[0] or int(knots[0]) != order:
            first_bad.append(a)
        if not unbranched[(a + 1) // 2 - 1]:
            axis_bad.append(a)
        # rows 1..2a cover b and b + 2a; their structure must repeat exactly
        chain_member = ~unbranched
        residues2 = (2 * np.arange(a + 1, 2 * a + 1, dtype=np.int64) - 1) % a
        rows_residues = (2 * np.arange(1, a + 1, dtype=np.int64) - 1) % a
        member_by_residue = np.zeros(a, dtype=bool)
        member_by_residue[rows_residues] = chain_member
        if not (member_by_residue[residues2] == chain_member).all():
            period_bad.append(a)
    _check(result, f"exactly one knot per standard column, odd a <= {window_bound}", one_knot_bad)
    _check(result, f"unbranched-row count == m_C - n_C, odd a <= {window_bound}", count_bad)
    _check(result, f"first standard row branched, odd a <= {window_bound}", first_bad)
    _check(result, f"axis row unbranched, odd a <= {window_bound}", axis_bad)
    _check(result, f"row pattern period 2a in b, odd a <= {window_bound}", period_bad)

    col_bad, period_big_bad, derive_bad = [], [], []
    for a in range(3, big_bound + 1, 2):
        bitmap = structure_bitmap(a, "big")
        m_b, n_b = bitmap.shape
        order = n_b // a
        per_col = np.zeros(n_b + 1, dtype=np.int64)
        for _, j in bitmap.perfect_positions:
            per_col[j] += 1
        if not (per_col[1:] == a - order).all():
            col_bad.append(a)
        # re-derive window 1 from materialized entries, then compare window 2
        direct = set()
        shifted = set()
        for i in range(1, m_b + 1):
            b1 = 2 * i - 1
            b2 = 2 * (i + m_b) - 1
            for j in range(1, n_b + 1):
                if is_perfect_knot(a, (1 << j) * b1):
                    direct.add((i, j))
                if is_perfect_knot(a, (1 << j) * b2):
                    shifted.add((i, j))
        if direct != set(bitmap.perfect_positions):
            derive_bad.append(a)
        if shifted != direct:
            period_big_bad.append(a)
    _check(result, f"big-window perfect knots per column == m_C - n_C, odd a <= {big_bound}", col_bad)
    _check(result, f"big-window pattern re-derived from entries, odd a <= {big_bound}", derive_bad)
    _check(result, f"big-window row period m_B, odd a <= {big_bound}", period_big_bad)
    return result


def verify_conjecture1(bound: int = 100_000) -> SuiteResult:
    """Order-divisibility criterion == base-2 Fermat condition, every odd a."""
    result = SuiteResult(suite="conjecture1", bound=bound)
    odds = np.arange(3, bound + 1, 2, dtype=np.int64)
    orders = ord2_batch(odds)
    bad = []
    for a, n in zip(odds.tolist(), orders.tolist()):
        if ((a - 1) % n == 0) != (pow(2, a - 1, a) == 1):
            bad.append(a)
    _check(result, f"(a-1) mod ord2(a) == 0 iff 2**(a-1) == 1 (mod a), odd a <= {bound}", bad)
    return result


def verify_symmetry(bound: int = 20_001) -> SuiteResult:
    """Label/primality correlations: SM and IMM at primes, UM at 2**k - 1."""
    result = SuiteResult(suite="symmetry", bound=bound)
    report = correlation_scan(bound)
    _check(
        result,
        f"SM/IMM labels imply prime, UM implies Mersenne number, odd a <= {bound}",
        [f"{kind}@{a}" for kind, a in report.counterexamples],
    )
    tally = ", ".join(f"{k}={report.class_counts[k]}" for k in sorted(report.class_counts))
    result.lines.append(f"     label tally: {tally}")
    return result


def verify_rank_symmetry(bound: int = 20_001) -> SuiteResult:
    """Rank/flag propositions: rank 1 -> sm, rank 2 odd n_C -> imm, m_L=1 -> um."""
    result = SuiteResult(suite="rank-symmetry", bound=bound)
    report = rank_symmetry_scan(bound)
    _check(
        result,
        f"rank/flag propositions, odd a <= {bound}",
        [f"{kind}@{a}" for kind, a in report.counterexamples],
    )
    return result


def verify_singularity(bound: int = 31) -> SuiteResult:
    """Mersenne prime exponents must be singular (the kaiser suite)."""
    result = SuiteResult(suite="kaiser", bound=bound)
    check = singularity_check(bound)
    _check(
        result,
        f"every Mersenne prime exponent n <= {bound} is singular",
        check.necessity_violations,
    )
    _check(result, "no factorization timeouts", sorted(check.failures))
    result.lines.append(f"     singular n: {check.singular_exponents}")
    if check.converse_notes:
        result.lines.append(
            f"     singular with composite Mersenne number (informational): {check.converse_notes}"
        )
    return result


def run_suite(suite: str, bound: int | None = None) -> SuiteResult:
    """Dispatch one named suite at its default or an explicit bound."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}, got {suite!r}")
    if bound is None:
        bound = DEFAULT_BOUNDS[suite]
    if suite == "invariants":
        return verify_invariants(window_bound=bound)
    if suite == "conjecture1":
        return verify_conjecture1(bound)
    if suite == "symmetry":
        return verify_symmetry(bound)
    if suite == "rank-symmetry":
        return verify_rank_symmetry(bound)
    return verify_singularity(bound)
