"""Littlewood-Richardson coefficients.

``lr_coefficient`` counts LR tableaux by backtracking over the skew cells in
reading order (compiled kernel when available).  ``tensor_expand`` uses a
separate strip-by-strip dynamic program over the labels, so the two routes
check each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import _backend
from ._lr_layout import reading_layout
from ._lr_py import iter_lr
from .cache import LRUCache
from .errors import ValidationError
from .partitions import (
    Partition,
    add_strips,
    contains,
    partitions_upto_box,
    remove_strips,
    scale,
)

Decomposition = dict  # Partition -> positive int, no zero entries

_lr_cache = LRUCache("lr")


@dataclass(frozen=True)
class LRQuery:
    nu: Partition
    lam: Partition
    mu: Partition

    def __post_init__(self) -> None:
        for f in ("nu", "lam", "mu"):
            object.__setattr__(self, f, Partition(getattr(self, f)))

    def canonical(self) -> "LRQuery":
        """Put the smaller partition in the content slot (fewer cells to fill)."""
        lam, mu = self.lam, self.mu
        if (mu.size, mu) > (lam.size, lam):
            lam, mu = mu, lam
        return LRQuery(self.nu, lam, mu)


def _feasible(nu: Partition, lam: Partition, mu: Partition) -> bool:
    return nu.size == lam.size + mu.size and contains(nu, lam) and contains(nu, mu)


def lr_coefficient(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> int:
    """c^nu_{lam,mu}; zero when the sizes or containments rule it out."""
    q = LRQuery(nu, lam, mu)
    if not _feasible(q.nu, q.lam, q.mu):
        return 0
    q = q.canonical()
    if not q.mu:
        return 1
    return _lr_cache.get_or_compute(
        (q.nu, q.lam, q.mu), lambda: _backend.count_lr(tuple(q.nu), tuple(q.lam), tuple(q.mu))
    )


def lr_tableaux(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Every LR tableau of shape nu/lam and content mu, as rows of skew entries left to right.

    No argument swapping happens here: the fillings are of exactly the requested shape.
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if not _feasible(nu, lam, mu):
        return []
    _, _, cells = reading_layout(tuple(nu), tuple(lam))
    out = []
    for vals in iter_lr(tuple(nu), tuple(lam), tuple(mu)):
        rows: list[list[int]] = [[] for _ in nu]
        for (r, _c), v in zip(cells, vals):
            rows[r].append(v)
        out.append(tuple(tuple(reversed(row)) for row in rows))
    return out


def reading_word(filling: Sequence[Sequence[int]]) -> str:
    """Rows top to bottom, each read right to left."""
    return "".join(str(v) for row in filling for v in reversed(row))


def _label_strips(shape: tuple[int, ...], m: int, prev: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    """Row-wise box counts x for adding an m-box horizontal strip with the lattice bound.

    With ``prev`` the per-row counts of the previous label, the cumulative count
    of the new label through row r may not exceed that of the previous label
    through row r-1.
    """
    rows = list(shape) + [0]
    n = len(rows)
    budget = [0] * (n + 1)
    if prev is not None:
        run = 0
        for r in range(n):
            budget[r] = run
            run += prev[r] if r < len(prev) else 0

    acc: list[int] = []

    def rec(r: int, left: int, used: int) -> Iterator[tuple[int, ...]]:
        if r == n:
            if left == 0:
                yield tuple(acc)
            return
        cap = left if r == 0 else min(left, rows[r - 1] - rows[r])
        if prev is not None:
            cap = min(cap, budget[r] - used)
        for x in range(cap, -1, -1):
            acc.append(x)
            yield from rec(r + 1, left - x, used + x)
            acc.pop()

    yield from rec(0, m, 0)


def _strip(t: tuple[int, ...]) -> tuple[int, ...]:
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


@lru_cache(maxsize=65536)
def _tensor_dp(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    states: dict[tuple[tuple[int, ...], tuple[int, ...] | None], int] = {(tuple(lam), None): 1}
    for part in mu:
        nxt: dict = {}
        for (shape, prev), ways in states.items():
            for x in _label_strips(shape, part, prev):
                rows = list(shape) + [0]
                new = _strip(tuple(a + b for a, b in zip(rows, x)))
                key = (new, _strip(x))
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    out: dict[Partition, int] = {}
    for (shape, _), ways in states.items():
        p = Partition(shape)
        out[p] = out.get(p, 0) + ways
    return tuple(sorted(out.items(), key=lambda kv: kv[0], reverse=True))


def tensor_expand(lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    """Map nu -> c^nu_{lam,mu} over every nu with a nonzero coefficient."""
    lam, mu = Partition(lam), Partition(mu)
    if (mu.size, mu) > (lam.size, lam):
        lam, mu = mu, lam
    if len(mu) == 1:
        return pieri(lam, mu[0], "horizontal")
    if mu and mu[0] == 1:
        return pieri(lam, len(mu), "vertical")
    return dict(_tensor_dp(lam, mu))


def pieri(lam: Sequence[int], m: int, orientation: str = "horizontal") -> Decomposition:
    """Product with Sym^m (horizontal) or the m-th exterior power (vertical); multiplicity free."""
    return {p: 1 for p in add_strips(lam, m, orientation)}


def restrict_branch(nu: Sequence[int], n: int | None = None, m: int | None = None) -> dict[tuple[Partition, Partition], int]:
    """Restriction of the nu-irreducible to S_n x S_m (all splits when ``n`` is None).

    The coefficient of (lam, mu) is c^nu_{lam,mu}.
    """
    nu = Partition(nu)
    total = nu.size
    if n is None and m is None:
        splits = [(i, total - i) for i in range(total + 1)]
    else:
        if n is None:
            n = total - m
        if m is None:
            m = total - n
        if n < 0 or m < 0 or n + m != total:
            raise ValidationError(f"split ({n},{m}) does not add up to |nu| = {total}")
        splits = [(n, m)]
    out: dict[tuple[Partition, Partition], int] = {}
    for a, b in splits:
        for lam in partitions_upto_box(a, nu):
            for mu in partitions_upto_box(b, nu):
                c = lr_coefficient(nu, lam, mu)
                if c:
                    out[(lam, mu)] = c
    return out


def remove_box(nu: Sequence[int]) -> list[Partition]:
    """Restriction from S_{n+1} to S_n: every way of removing one corner box."""
    return remove_strips(nu, 1, "horizontal")


def stretched_coefficient(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int], N: int) -> int:
    """c^{N nu}_{N lam, N mu}."""
    if N < 1:
        raise ValidationError("stretch factor must be >= 1")
    return lr_coefficient(scale(nu, N), scale(lam, N), scale(mu, N))

