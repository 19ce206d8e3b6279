"""Cell layout shared by the LR counting kernels.

Cells of ``outer/inner`` are listed in reading order (rows top to bottom, each
row right to left).  For every cell we record the index of its right neighbour
and of the cell above, or -1 when that neighbour is not part of the skew shape.
Both neighbours precede the cell in reading order.
"""
from __future__ import annotations


def reading_layout(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    index: dict[tuple[int, int], int] = {}
    cells: list[tuple[int, int]] = []
    for r, row in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for c in range(row - 1, start - 1, -1):
            index[(r, c)] = len(cells)
            cells.append((r, c))
    right = [index.get((r, c + 1), -1) for r, c in cells]
    above = [index.get((r - 1, c), -1) for r, c in cells]
    return right, above, cells
