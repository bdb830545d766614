"""Shapes and structure of the standard, little, and big matrices of f_a.

The standard matrix is the a x ord2(a) repeating tile of the tree (rows hold
b = 1, 3, ..., 2a-1; column j holds 2**j * b).  The little matrix is the
sub-tile ending at the lowest knot a + 1, with n_L = v2(a+1) columns and
m_L = (odd_part(a+1) + 1)/2 rows.  The big matrix is the a**2 x a*ord2(a)
tile on which the perfect-knot pattern repeats.  Shapes come from arithmetic
alone; entries and structure bitmaps are only materialized inside explicit
render bounds because entries grow like 2**j.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from collatzmat.numth import _require_odd, odd_part, ord2, pow2_chain, v2
from collatzmat.tree import RowStructure

DEFAULT_STANDARD_BOUND = 9_999
DEFAULT_BIG_BOUND = 99


class StandardShape(NamedTuple):
    m_c: int
    n_c: int


class LittleShape(NamedTuple):
    m_l: int
    n_l: int


class BigShape(NamedTuple):
    m_b: int
    n_b: int


@dataclass(frozen=True)
class StructureBitmap:
    """Branching structure of one window: per-row records plus perfect knots.

    rows[i-1] describes window row i (holding b = 2i - 1); perfect_positions
    lists every (row, col) in the window whose entry is a perfect knot
    (populated for the big window, empty for the standard one).
    """

    a: int
    window: str
    shape: tuple[int, int]
    rows: list[RowStructure]
    perfect_positions: list[tuple[int, int]]

    @property
    def axis_row(self) -> int:
        return (self.shape[0] + 1) // 2


def standard_shape(a: int) -> StandardShape:
    """(m_C, n_C) = (a, ord2(a)); satisfies (2**n_C - 1) % m_C == 0."""
    _require_odd(a, "standard_shape")
    return StandardShape(a, ord2(a))


def little_shape(a: int) -> LittleShape:
    """(m_L, n_L) with n_L = v2(a+1), m_L = (odd_part(a+1)+1)/2.

    Defined for a = 1 as well (a + 1 = 2 gives the 1 x 1 tile).  The exact
    identity (1 + m_C + 2**n_L) / 2**(n_L+1) == m_L always holds.
    """
    _require_odd(a, "little_shape")
    return LittleShape((odd_part(a + 1) + 1) // 2, v2(a + 1))


def big_shape(a: int) -> BigShape:
    """(m_B, n_B) = (a**2, a * ord2(a))."""
    _require_odd(a, "big_shape")
    return BigShape(a * a, a * ord2(a))


def standard_entry(a: int, i: int, j: int) -> int:
    """Window entry 2**j * (2i - 1); entry (1, n_C) is the first knot of row 1."""
    m, n = standard_shape(a)
    if not 1 <= i <= m:
        raise ValueError(f"row {i} outside 1..{m} for a={a}")
    if not 1 <= j <= n:
        raise ValueError(f"col {j} outside 1..{n} for a={a}")
    return (1 << j) * (2 * i - 1)


def _pow2_chain_array(a: int) -> np.ndarray:
    """pow2_chain(a) as an int64 array, built by doubling the chain length.

    Each extension multiplies the known chain by 2**len(chain) mod a, so the
    work is O(ord2(a)) array operations of geometrically growing size.  Falls
    back to the scalar chain above int32 range (products must stay in int64).
    """
    if a >= 1 << 31:
        return np.array(pow2_chain(a), dtype=np.int64)
    if a == 1:
        return np.zeros(1, dtype=np.int64)
    chain = np.array([1], dtype=np.int64)
    step = 2 % a
    while True:
        ext = chain * step % a
        hits = np.flatnonzero(ext == 1)
        if hits.size:
            return np.concatenate([chain, ext[: hits[0]]])
        chain = np.concatenate([chain, ext])
        step = step * step % a


def row_profile(a: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-row structure of the standard window, vectorized.

    Returns (unbranched, knot) arrays indexed by row-1 for rows 1..a: boolean
    unbranched flags and the knot column (0 where unbranched).  As i runs over
    1..a the residues (2i - 1) mod a hit every residue class exactly once, so
    the branched rows are exactly those whose residue lies in the doubling
    chain, at column ord2(a) - t for chain position t (t = 0 meaning the full
    order).
    """
    _require_odd(a, "row_profile")
    if a == 1:
        return np.zeros(1, dtype=bool), np.ones(1, dtype=np.int64)
    chain = _pow2_chain_array(a)
    order = chain.size
    member = np.zeros(a, dtype=bool)
    member[chain] = True
    position = np.zeros(a, dtype=np.int64)
    position[chain] = np.arange(order, dtype=np.int64)
    residues = (2 * np.arange(1, a + 1, dtype=np.int64) - 1) % a
    unbranched = ~member[residues]
    t = position[residues]
    knot = np.where(unbranched, 0, np.where(t == 0, order, order - t))
    return unbranched, knot


def structure_bitmap(
    a: int,
    window: str = "standard",
    standard_bound: int = DEFAULT_STANDARD_BOUND,
    big_bound: int = DEFAULT_BIG_BOUND,
) -> StructureBitmap:
    """Materialize one window's row records (and perfect knots for "big").

    A big-window position (i, j) holds 2**j * (2i - 1); it is a perfect knot
    when that value is a knot whose generator c = (value - 1)/a lies in an
    unbranched row, decided via c mod a without ever forming the huge entry.
    """
    _require_odd(a, "structure_bitmap")
    if window not in ("standard", "big"):
        raise ValueError(f"window must be 'standard' or 'big', got {window!r}")
    if a < 3:
        raise ValueError(f"structure_bitmap requires a >= 3, got {a}")
    unbranched, knot = row_profile(a)
    order = int(ord2(a))

    def row(i: int) -> RowStructure:
        k = int(knot[(i - 1) % a])
        return RowStructure(a=a, b=2 * i - 1, knot_col=k if k else None)

    if window == "standard":
        if a > standard_bound:
            raise ValueError(
                f"standard window for a={a} exceeds the render bound {standard_bound}"
            )
        m, n = standard_shape(a)
        return StructureBitmap(
            a=a,
            window="standard",
            shape=(m, n),
            rows=[row(i) for i in range(1, m + 1)],
            perfect_positions=[],
        )

    if a > big_bound:
        raise ValueError(f"big window for a={a} exceeds the render bound {big_bound}")
    m_b, n_b = big_shape(a)
    a2 = a * a
    perfect: list[tuple[int, int]] = []
    # unbranched status keyed by residue class: row i has residue (2i - 1) % a,
    # and rows 1..a of the profile cover every residue exactly once.
    unbr_by_residue = np.zeros(a, dtype=bool)
    rows_residues = (2 * np.arange(1, a + 1, dtype=np.int64) - 1) % a
    unbr_by_residue[rows_residues] = unbranched
    rows = []
    for i in range(1, m_b + 1):
        r = row(i)
        rows.append(r)
        if r.knot_col is None:
            continue
        b = 2 * i - 1
        for j in range(r.knot_col, n_b + 1, order):
            c_mod_a = ((pow(2, j, a2) * b - 1) % a2) // a
            if unbr_by_residue[c_mod_a]:
                perfect.append((i, j))
    perfect.sort()
    return StructureBitmap(
        a=a,
        window="big",
        shape=(m_b, n_b),
        rows=rows,
        perfect_positions=perfect,
    )
