"""Pure-numpy batch kernels for multiplicative orders of 2.

Both kernels run the same doubling recurrence as the scalar reference
(r <- 2r mod a, counting steps until r == 1) but vectorized across the whole
input array.  `order_batch` keeps a shrinking active set so finished entries
stop costing work; `order_batch_capped` runs a fixed number of rounds, which
is faster when only small orders matter.

Inputs must be odd positive int64 values below 2**62 (so that 2r never
overflows a signed 64-bit lane); the public wrappers in `numth` validate this.
"""

import numpy as np

BACKEND = "numpy"


def order_batch(odds: np.ndarray) -> np.ndarray:
    """Multiplicative order of 2 modulo each entry (order of 1 is 1)."""
    odds = np.ascontiguousarray(odds, dtype=np.int64)
    out = np.zeros(odds.size, dtype=np.int64)
    out[odds == 1] = 1
    idx = np.flatnonzero(odds != 1)
    a = odds[idx]
    r = np.full(idx.size, 2, dtype=np.int64) % np.maximum(a, 1)
    done = np.empty(idx.size, dtype=bool)
    ge = np.empty(idx.size, dtype=bool)
    retired = 0
    j = 1
    while idx.size:
        np.equal(r, 1, out=done)
        hits = int(np.count_nonzero(done))
        if hits:
            out[idx[done]] = j
            # retire the lane in place: r = 0 can never reach 1 again, so
            # finished entries keep cycling harmlessly until the next compaction
            r[done] = 0
            retired += hits
            if retired * 4 >= idx.size:
                keep = r != 0
                idx, a, r = idx[keep], a[keep], r[keep]
                done = np.empty(idx.size, dtype=bool)
                ge = np.empty(idx.size, dtype=bool)
                retired = 0
                if not idx.size:
                    break
        r <<= 1
        np.greater_equal(r, a, out=ge)
        np.subtract(r, a, out=r, where=ge)
        j += 1
    return out


def order_batch_capped(odds: np.ndarray, cap: int) -> np.ndarray:
    """Like order_batch but report 0 for entries whose order exceeds cap."""
    odds = np.ascontiguousarray(odds, dtype=np.int64)
    out = np.zeros(odds.size, dtype=np.int64)
    found = odds == 1
    out[found] = 1
    a = np.maximum(odds, 1)
    r = np.full(odds.size, 2, dtype=np.int64) % a
    for j in range(1, cap + 1):
        hit = (~found) & (r == 1)
        if hit.any():
            out[hit] = j
            found |= hit
        r <<= 1
        np.subtract(r, a, out=r, where=r >= a)
    return out
