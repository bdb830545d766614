"""Exact integer arithmetic and the independent number-theoretic oracles.

Everything downstream (matrix shapes, symmetry, the divisibility criterion,
singularity counts) reduces to a handful of primitives collected here:
2-adic valuations, modular powers, the multiplicative order of 2, a
deterministic Miller-Rabin primality test, the base-2 Fermat test, the
Lucas-Lehmer test, and a trial-division + Brent-rho factorizer.  All functions
are pure and operate on Python integers, so they widen transparently; the
batch order routines additionally validate their inputs before handing off to
the selected array kernel.
"""

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from collatzmat import kernels

# Witnesses that make Miller-Rabin deterministic for n < 3.317e24 (> 2**81).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

# Odd inputs to the int64 kernels must keep 2r below 2**63.
_KERNEL_BOUND = 1 << 62


def v2(x: int) -> int:
    """Largest k with 2**k dividing x (the 2-adic valuation)."""
    if x < 1:
        raise ValueError(f"v2 requires x >= 1, got {x}")
    return (x & -x).bit_length() - 1


def odd_part(x: int) -> int:
    """x with every factor of 2 divided out."""
    if x < 1:
        raise ValueError(f"odd_part requires x >= 1, got {x}")
    return x >> v2(x)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by repeated squaring (never materializes base**exp)."""
    if modulus < 1:
        raise ValueError(f"mod_pow requires modulus >= 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"mod_pow requires exp >= 0, got {exp}")
    return pow(base, exp, modulus)


def _require_odd(a: int, who: str) -> None:
    if a < 1 or a % 2 == 0:
        raise ValueError(f"{who} requires an odd positive integer, got {a}")


def ord2(a: int) -> int:
    """Least n >= 1 with 2**n == 1 (mod a); by convention ord2(1) == 1.

    Computed by iterative doubling, O(order) steps with tiny constants.  This
    is the reference implementation the batch kernels are checked against.
    """
    _require_odd(a, "ord2")
    if a == 1:
        return 1
    r = 2 % a
    n = 1
    while r != 1:
        r <<= 1
        if r >= a:
            r -= a
        n += 1
    return n


def pow2_chain(a: int) -> list[int]:
    """Residues [2**0, 2**1, ..., 2**(ord2(a)-1)] mod a.

    The chain is the subgroup generated by 2 in (Z/a)*, listed in doubling
    order; membership and position lookups against it answer every knot and
    unbranched-row question for the modulus a.
    """
    _require_odd(a, "pow2_chain")
    if a == 1:
        return [0]
    chain = [1]
    r = 2 % a
    while r != 1:
        chain.append(r)
        r <<= 1
        if r >= a:
            r -= a
    return chain


def _as_odd_int64(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.int64)
    if arr.size:
        if int(arr.min()) < 1:
            raise ValueError("batch order inputs must be positive")
        if int(arr.max()) >= _KERNEL_BOUND:
            raise ValueError("batch order inputs must be < 2**62")
        if not (arr & 1).all():
            raise ValueError("batch order inputs must all be odd")
    return arr


def ord2_batch(values) -> np.ndarray:
    """ord2 over an array of odd positive integers (selected backend kernel)."""
    return kernels.order_batch(_as_odd_int64(values))


def ord2_batch_capped(values, cap: int) -> np.ndarray:
    """ord2 where it is <= cap, else 0; much faster for small caps."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    return kernels.order_batch_capped(_as_odd_int64(values), cap)


def primes_below(n: int) -> np.ndarray:
    """All primes < n, ascending, via a boolean sieve."""
    if n <= 2:
        return np.empty(0, dtype=np.int64)
    composite = np.zeros(n, dtype=bool)
    composite[:2] = True
    for p in range(2, math.isqrt(n - 1) + 1):
        if not composite[p]:
            composite[p * p :: p] = True
    return np.flatnonzero(~composite).astype(np.int64)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; proven correct for n < 3.3e24 (beyond 2**81).

    Above that bound the same witness set still runs and no counterexample is
    known, but the determinism guarantee is only claimed below it.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = v2(d)
    d >>= s
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def fermat_base2_holds(n: int) -> bool:
    """True iff 2**(n-1) == 1 (mod n); the base-2 Fermat probable-prime test."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"fermat_base2_holds requires odd n >= 3, got {n}")
    return pow(2, n - 1, n) == 1


def lucas_lehmer(p: int) -> bool:
    """True iff 2**p - 1 is prime, for odd prime p, via the s <- s*s - 2 recurrence."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"lucas_lehmer requires an odd prime, got {p}")
    if not is_prime(p):
        raise ValueError(f"lucas_lehmer requires a prime exponent, got {p}")
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0


class FactorizationTimeout(Exception):
    """Raised when a cofactor resists splitting within the time budget."""

    def __init__(self, n: int, cofactor: int):
        self.n = n
        self.cofactor = cofactor
        super().__init__(
            f"factorization of {n} timed out with unsplit cofactor {cofactor}"
        )


@dataclass(frozen=True)
class Factorization:
    """A complete prime factorization: base == prod(p**e), primes ascending."""

    base: int
    factors: tuple[tuple[int, int], ...]

    def divisors(self) -> list[int]:
        """All positive divisors of base, ascending."""
        divs = [1]
        for p, e in self.factors:
            pk = 1
            stretched = []
            for _ in range(e):
                pk *= p
                stretched.extend(d * pk for d in divs)
            divs.extend(stretched)
        return sorted(divs)


_TRIAL_BOUND = 10_000
_trial_primes: list[int] | None = None


def _small_primes() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = [int(p) for p in primes_below(_TRIAL_BOUND)]
    return _trial_primes


def _brent_rho(n: int, rng: random.Random, deadline: float) -> int:
    """A nontrivial factor of composite odd n, by Brent's cycle variant."""
    while True:
        if time.monotonic() > deadline:
            raise FactorizationTimeout(n, n)
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
                if time.monotonic() > deadline:
                    raise FactorizationTimeout(n, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, timeout: float = 30.0) -> Factorization:
    """Complete prime factorization by trial division then Brent rho.

    Practical for inputs to roughly 2**80 at desk scale.  Raises
    FactorizationTimeout (carrying the stubborn cofactor) instead of spinning
    forever when a split does not land within `timeout` seconds.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    deadline = time.monotonic() + timeout
    counts: dict[int, int] = {}
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    stack = [rest] if rest > 1 else []
    rng = random.Random(n)
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_prime(c):
            counts[c] = counts.get(c, 0) + 1
            continue
        try:
            d = _brent_rho(c, rng, deadline)
        except FactorizationTimeout:
            raise FactorizationTimeout(n, c) from None
        stack.append(d)
        stack.append(c // d)
    factors = tuple(sorted(counts.items()))
    check = 1
    for p, e in factors:
        check *= p**e
    if check != n:
        raise AssertionError(f"factorization of {n} reassembled to {check}")
    return Factorization(base=n, factors=factors)
