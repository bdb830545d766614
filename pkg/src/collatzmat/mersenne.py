"""Exponent singularity: how many odd a share a given column count ord2(a) = n.

Any odd a with ord2(a) = n divides 2**n - 1, so the exact census enumerates
divisors of 2**n - 1 and keeps those of full order; 2**n - 1 itself always
qualifies, and n is called singular when it is the only one.  For prime n
every prime factor of 2**n - 1 has order exactly n, which makes singularity
equivalent to 2**n - 1 being a Mersenne prime — the necessity direction
(Mersenne prime exponent implies singular) is what singularity_check verifies
against a Lucas-Lehmer oracle.  A bounded scan mirrors the census up to an
explicit a-limit; for n <= 19 the classical 1,999,999 limit already sees
every divisor of 2**n - 1.
"""

from dataclasses import dataclass, field

import numpy as np

from collatzmat.numth import (
    FactorizationTimeout,
    factorize,
    is_prime,
    lucas_lehmer,
    ord2,
    ord2_batch_capped,
)


@dataclass(frozen=True)
class SingularityReport:
    """Census for one exponent n: the odd a with ord2(a) = n, plus oracles."""

    n: int
    count: int
    witnesses: list[int]
    singular: bool
    mersenne_prime: bool


@dataclass(frozen=True)
class SingularityCheck:
    """singularity_check output: per-n reports plus expected-empty violations."""

    n_max: int
    reports: list[SingularityReport]
    necessity_violations: list[int]
    converse_notes: list[int] = field(default_factory=list)
    failures: dict[int, str] = field(default_factory=dict)

    @property
    def singular_exponents(self) -> list[int]:
        return [r.n for r in self.reports if r.singular]


def mersenne_number_is_prime(n: int) -> bool:
    """Primality of 2**n - 1: Lucas-Lehmer for odd prime n, directly otherwise.

    n = 2 gives the prime 3; a composite exponent n = d*e forces the factor
    2**d - 1, so the answer is False without any heavy test; n = 1 gives 1.
    """
    if n < 1:
        raise ValueError(f"mersenne_number_is_prime requires n >= 1, got {n}")
    if n == 1:
        return False
    if n == 2:
        return True
    if not is_prime(n):
        return False
    return lucas_lehmer(n)


def nc_count_bounded(n: int, a_max: int) -> tuple[int, list[int]]:
    """All odd a <= a_max with ord2(a) = n, via the capped batch kernel."""
    if n < 1:
        raise ValueError(f"nc_count_bounded requires n >= 1, got {n}")
    if a_max < 1:
        raise ValueError(f"nc_count_bounded requires a_max >= 1, got {a_max}")
    odds = np.arange(1, a_max + 1, 2, dtype=np.int64)
    orders = ord2_batch_capped(odds, n)
    witnesses = odds[orders == n].tolist()
    return len(witnesses), witnesses


def nc_count_exact(n: int, timeout: float = 30.0) -> tuple[int, list[int]]:
    """All odd a with ord2(a) = n, independent of any bound.

    Such a divide 2**n - 1, so the census is the divisors of full order;
    2**n - 1 itself always has order exactly n.  Factorization cost caps the
    practical range around n <= 80; a FactorizationTimeout propagates.
    """
    if n < 1:
        raise ValueError(f"nc_count_exact requires n >= 1, got {n}")
    if n == 1:
        return 1, [1]
    mersenne = (1 << n) - 1
    divisors = factorize(mersenne, timeout=timeout).divisors()
    witnesses = [d for d in divisors if ord2(d) == n]
    if witnesses[-1] != mersenne:
        raise AssertionError(f"2**{n}-1 missing from its own witness list")
    return len(witnesses), witnesses


def is_singular(n: int, timeout: float = 30.0) -> bool:
    """True iff exactly one odd a has ord2(a) = n (decided by the exact census)."""
    count, _ = nc_count_exact(n, timeout=timeout)
    return count == 1


def singularity_report(n: int, timeout: float = 30.0) -> SingularityReport:
    """Exact census plus the Mersenne-primality oracle verdict for one n."""
    count, witnesses = nc_count_exact(n, timeout=timeout)
    return SingularityReport(
        n=n,
        count=count,
        witnesses=witnesses,
        singular=count == 1,
        mersenne_prime=mersenne_number_is_prime(n),
    )


def singularity_check(n_max: int, timeout: float = 30.0) -> SingularityCheck:
    """Necessity check over n = 1..n_max: Mersenne prime exponents must be singular.

    n = 1 is reported (count 1, witness {1}) but exempt from the necessity
    rule since 2**1 - 1 = 1 is not prime.  Singular n whose Mersenne number
    is composite are recorded as informational converse notes, not violations
    (the claim is one-directional).  Per-n factorization timeouts are flagged
    in `failures` instead of aborting the whole check.
    """
    if n_max < 2:
        raise ValueError(f"singularity_check requires n_max >= 2, got {n_max}")
    reports: list[SingularityReport] = []
    violations: list[int] = []
    converse: list[int] = []
    failures: dict[int, str] = {}
    for n in range(1, n_max + 1):
        try:
            report = singularity_report(n, timeout=timeout)
        except FactorizationTimeout as exc:
            failures[n] = str(exc)
            continue
        reports.append(report)
        if n >= 2 and report.mersenne_prime and not report.singular:
            violations.append(n)
        if report.singular and not report.mersenne_prime:
            converse.append(n)
    return SingularityCheck(
        n_max=n_max,
        reports=reports,
        necessity_violations=violations,
        converse_notes=converse,
        failures=failures,
    )


def exponent_frequencies(n_max: int, a_max: int) -> dict[int, tuple[int, list[int]]]:
    """Bounded census for every n = 1..n_max in one pass over the odd a <= a_max."""
    if n_max < 1:
        raise ValueError(f"exponent_frequencies requires n_max >= 1, got {n_max}")
    odds = np.arange(1, a_max + 1, 2, dtype=np.int64)
    orders = ord2_batch_capped(odds, n_max)
    out: dict[int, tuple[int, list[int]]] = {}
    for n in range(1, n_max + 1):
        witnesses = odds[orders == n].tolist()
        out[n] = (len(witnesses), witnesses)
    return out
