"""Pure-Python LR tableau counter (fallback for the compiled kernel)."""
from __future__ import annotations

from ._lr_layout import reading_layout


def count_lr(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of LR tableaux of shape ``outer/inner`` and weight ``content``.

    Assumes ``|outer| = |inner| + |content|`` and ``inner`` inside ``outer``.
    """
    right, above, _ = reading_layout(outer, inner)
    ncells = len(right)
    nlab = len(content)
    if ncells == 0:
        return 1
    cap = [ncells + 1] + list(content)
    counts = [ncells + 1] + [0] * nlab
    vals = [0] * ncells

    def rec(k: int) -> int:
        if k == ncells:
            return 1
        hi = nlab if right[k] < 0 else vals[right[k]]
        lo = 1 if above[k] < 0 else vals[above[k]] + 1
        total = 0
        for v in range(lo, hi + 1):
            cv = counts[v]
            if cv >= cap[v] or cv >= counts[v - 1]:
                continue
            counts[v] = cv + 1
            vals[k] = v
            total += rec(k + 1)
            counts[v] = cv
        return total

    return rec(0)


def iter_lr(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]):
    """Yield each LR tableau as a list of entries in reading order."""
    right, above, _ = reading_layout(outer, inner)
    ncells = len(right)
    nlab = len(content)
    cap = [ncells + 1] + list(content)
    counts = [ncells + 1] + [0] * nlab
    vals = [0] * ncells

    def rec(k: int):
        if k == ncells:
            yield list(vals)
            return
        hi = nlab if right[k] < 0 else vals[right[k]]
        lo = 1 if above[k] < 0 else vals[above[k]] + 1
        for v in range(lo, hi + 1):
            cv = counts[v]
            if cv >= cap[v] or cv >= counts[v - 1]:
                continue
            counts[v] = cv + 1
            vals[k] = v
            yield from rec(k + 1)
            counts[v] = cv

    yield from rec(0)
