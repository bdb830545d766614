"""Numba-compiled batch kernels for multiplicative orders of 2.

Same contracts as `collatzmat.kernels._numpy`; the doubling loop is compiled
per entry instead of vectorized, which wins by a wide margin on long scans.
Importing this module requires numba; `collatzmat.kernels` falls back to the
numpy implementation when it is unavailable.
"""

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def order_batch(odds):
    out = np.empty(odds.size, dtype=np.int64)
    for i in range(odds.size):
        a = odds[i]
        if a == 1:
            out[i] = 1
            continue
        r = 2 % a
        j = 1
        while r != 1:
            r <<= 1
            if r >= a:
                r -= a
            j += 1
        out[i] = j
    return out


@njit(cache=True)
def order_batch_capped(odds, cap):
    out = np.zeros(odds.size, dtype=np.int64)
    for i in range(odds.size):
        a = odds[i]
        if a == 1:
            out[i] = 1
            continue
        r = 2 % a
        j = 1
        while j <= cap:
            if r == 1:
                out[i] = j
                break
            r <<= 1
            if r >= a:
                r -= a
            j += 1
    return out
