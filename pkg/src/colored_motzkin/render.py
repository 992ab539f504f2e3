"""ASCII drawings of paths and tableaux."""
from __future__ import annotations

from typing import Sequence

from .core import color, shape_of


def render_path(cells: Sequence[int]) -> str:
    """Draw a path one column per cell, color digit above each colored step.

    Each height band takes two text rows: glyphs below, color labels above.
    Letter cells of a working sequence are printed on the bottom row.
    """
    h = 0
    placed = []  # (row, glyph, color digit or '')
    for c in cells:
        if c < 0:
            placed.append((0, str(-c) if -c < 10 else "*", ""))
        elif c == 0:
            placed.append((h, "_", ""))
        elif c & 1:
            placed.append((h, "/", str(color(c))))
            h += 1
        else:
            h -= 1
            placed.append((h, "\\", str(color(c))))
    if not placed:
        return ""
    top = max(r for r, _, _ in placed)
    grid = [[" "] * len(placed) for _ in range(2 * top + 2)]
    for x, (r, glyph, label) in enumerate(placed):
        grid[2 * r][x] = glyph
        if label:
            grid[2 * r + 1][x] = label[-1]
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    while lines and not lines[0]:
        lines.pop(0)
    return "\n".join(lines)


def tableau_rows(word: Sequence[int]) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in shape_of(word)]
    for j, v in enumerate(word, 1):
        rows[v - 1].append(j)
    return rows


def render_tableau(word: Sequence[int]) -> str:
    rows = tableau_rows(word)
    width = len(str(len(word))) if word else 1
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows)
