"""Text renderings of the tree, standard, little, and big matrices.

Markers replace the visual annotations of the matrices: a K suffix marks a
knot entry, a P suffix a perfect knot, a U in the row prefix an unbranched
row, and the middle row of the standard/big windows carries an axis tag.
ascii output is a fixed-width grid; csv is one line per cell with marker
columns; json is one object carrying rows of cells.  All three are
deterministic byte-for-byte for a given invocation, and an optional color
switch adds ANSI colors to the ascii form only (never in golden files).
"""

import json

from collatzmat.matrices import (
    DEFAULT_BIG_BOUND,
    DEFAULT_STANDARD_BOUND,
    little_shape,
    row_profile,
    standard_shape,
    structure_bitmap,
)
from collatzmat.numth import _require_odd, ord2
from collatzmat.tree import is_unbranched, tree_entry

MATRICES = ("tree", "standard", "little", "big")
FORMATS = ("ascii", "csv", "json")

_RED = "\x1b[31m"
_BLUE = "\x1b[34m"
_BOLD = "\x1b[1m"
_RESET = "\x1b[0m"


def _tree_grid(a: int, rows: int, cols: int) -> list[dict]:
    """Cells of the tree window: columns 0 (knot), 1 (odd), then doublings."""
    grid = []
    for i in range(1, rows + 1):
        b = 2 * i - 1
        cells = []
        for c in range(cols):
            v = tree_entry(a, i, c)
            knot = v % 2 == 0 and (v - 1) % a == 0
            perfect = knot and is_unbranched(a, (v - 1) // a)
            cells.append({"col": c, "value": v, "knot": knot, "perfect": perfect})
        grid.append(
            {
                "row": i,
                "b": b,
                "unbranched": is_unbranched(a, b),
                "axis": False,
                "cells": cells,
            }
        )
    return grid


def _window_grid(
    a: int,
    matrix: str,
    row_limit: int | None,
    col_limit: int | None,
    standard_bound: int,
    big_bound: int,
) -> tuple[list[dict], tuple[int, int], int | None]:
    """Cells of the standard, little, or big window with K/P/U/axis markers.

    Returns (grid, full_shape, axis_row); the grid is clipped to the limits
    before any entry is materialized since big-window entries reach 2**n_B.
    """
    order = ord2(a)
    perfect: set[tuple[int, int]] = set()
    if matrix == "big":
        bitmap = structure_bitmap(
            a, "big", standard_bound=standard_bound, big_bound=big_bound
        )
        m_full, n_full = bitmap.shape
        perfect = set(bitmap.perfect_positions)
        knot_cols = [bitmap.rows[k].knot_col for k in range(a)]
        axis_row = bitmap.axis_row
    elif matrix == "standard":
        if a > standard_bound:
            raise ValueError(
                f"standard window for a={a} exceeds the render bound {standard_bound}"
            )
        m_full, n_full = standard_shape(a)
        _, knots = row_profile(a)
        knot_cols = [int(k) if k else None for k in knots]
        axis_row = (m_full + 1) // 2
    else:
        m_full, n_full = little_shape(a)
        _, knots = row_profile(a)
        knot_cols = [int(k) if k else None for k in knots]
        axis_row = None
    m = m_full if row_limit is None else min(m_full, row_limit)
    n = n_full if col_limit is None else min(n_full, col_limit)
    grid = []
    for i in range(1, m + 1):
        b = 2 * i - 1
        knot_col = knot_cols[(i - 1) % a]
        cells = []
        for j in range(1, n + 1):
            knot = knot_col is not None and (j - knot_col) % order == 0
            cells.append(
                {
                    "col": j,
                    "value": (1 << j) * b,
                    "knot": knot,
                    "perfect": (i, j) in perfect,
                }
            )
        grid.append(
            {
                "row": i,
                "b": b,
                "unbranched": knot_col is None,
                "axis": i == axis_row,
                "cells": cells,
            }
        )
    return grid, (m_full, n_full), axis_row


def _ascii(a: int, matrix: str, shape: tuple[int, int], grid: list[dict], color: bool) -> str:
    def cell_text(cell: dict) -> str:
        mark = "P" if cell["perfect"] else ("K" if cell["knot"] else "")
        return f"{cell['value']}{mark}"

    def colorize(cell: dict, text: str) -> str:
        if not color:
            return text
        if cell["perfect"]:
            return f"{_BOLD}{_RED}{text}{_RESET}"
        if cell["knot"]:
            return f"{_RED}{text}{_RESET}"
        return text

    width = max(len(cell_text(c)) for row in grid for c in row["cells"])
    iw = len(str(grid[-1]["row"]))
    lines = [f"{matrix} matrix a={a} shape {shape[0]}x{shape[1]}"]
    for row in grid:
        flag = "U" if row["unbranched"] else " "
        if color and row["unbranched"]:
            flag = f"{_BLUE}U{_RESET}"
        cells = " ".join(colorize(c, f"{cell_text(c):>{width}}") for c in row["cells"])
        line = f"{row['row']:>{iw}} {flag}| {cells}"
        if row["axis"]:
            line += "  <- axis"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _csv(grid: list[dict]) -> str:
    lines = ["row,col,value,knot,perfect,unbranched_row,axis_row"]
    for row in grid:
        for c in row["cells"]:
            lines.append(
                f"{row['row']},{c['col']},{c['value']},"
                f"{int(c['knot'])},{int(c['perfect'])},"
                f"{int(row['unbranched'])},{int(row['axis'])}"
            )
    return "\n".join(lines) + "\n"


def _json(a: int, matrix: str, shape: tuple[int, int], axis_row, grid: list[dict]) -> str:
    payload = {
        "matrix": matrix,
        "a": a,
        "shape": list(shape),
        "axis_row": axis_row,
        "rows": grid,
    }
    return json.dumps(payload, indent=2) + "\n"


def render(
    a: int,
    matrix: str,
    rows: int | None = None,
    cols: int | None = None,
    fmt: str = "ascii",
    color: bool = False,
    standard_bound: int = DEFAULT_STANDARD_BOUND,
    big_bound: int = DEFAULT_BIG_BOUND,
) -> str:
    """Render one matrix window of f_a as ascii, csv, or json text."""
    _require_odd(a, "render")
    if matrix not in MATRICES:
        raise ValueError(f"matrix must be one of {MATRICES}, got {matrix!r}")
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if matrix == "tree":
        if rows is None or cols is None:
            raise ValueError("tree rendering requires explicit --rows and --cols")
        if rows < 1 or cols < 1:
            raise ValueError("tree rendering requires rows >= 1 and cols >= 1")
        grid = _tree_grid(a, rows, cols)
        shape = (rows, cols)
        axis_row = None
    else:
        if a < 3:
            raise ValueError(f"{matrix} rendering requires a >= 3, got {a}")
        grid, shape, axis_row = _window_grid(
            a, matrix, rows, cols, standard_bound, big_bound
        )
    if fmt == "ascii":
        return _ascii(a, matrix, shape, grid, color)
    if fmt == "csv":
        return _csv(grid)
    return _json(a, matrix, shape, axis_row, grid)
