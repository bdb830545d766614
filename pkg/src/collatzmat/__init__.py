"""Structure theory of generalized Collatz maps f_a (halve even n, send odd n to a*n+1).

For every odd a the map induces an infinite tree matrix whose rows repeat with
period a; the repeating tile (the standard matrix), its sub-tile ending at the
lowest knot (the little matrix), and the a-fold tile carrying the perfect-knot
pattern (the big matrix) are all described by exact integer arithmetic.  On top
of these the package classifies unbranched-row symmetry, evaluates a
divisibility criterion separating primes and base-2 pseudoprimes from other
composites, and counts matrices per column-count to test exponent singularity
against a Lucas-Lehmer oracle.
"""

from collatzmat.numth import ord2, is_prime, factorize
from collatzmat.matrices import standard_shape, little_shape, big_shape
from collatzmat.symmetry import classify, pattern_flags
from collatzmat.criterion import criterion_holds, rank, classify_number
from collatzmat.mersenne import is_singular, nc_count_bounded, nc_count_exact

__version__ = "0.1.0"

__all__ = [
    "ord2",
    "is_prime",
    "factorize",
    "standard_shape",
    "little_shape",
    "big_shape",
    "classify",
    "pattern_flags",
    "criterion_holds",
    "rank",
    "classify_number",
    "is_singular",
    "nc_count_bounded",
    "nc_count_exact",
    "__version__",
]
