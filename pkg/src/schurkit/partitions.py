"""Partitions, Young diagrams and the shape-level combinatorics built on them.

A :class:`Partition` is an immutable tuple of positive integers in weakly
decreasing order.  Trailing zeros are stripped on construction, so ``()`` is the
zero partition and ``Partition([2, 1, 0]) == Partition([2, 1])``.  Ordering is
plain tuple (lexicographic) ordering, which is the total order used whenever a
deterministic listing is needed.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ValidationError

__all__ = [
    "Partition",
    "Cell",
    "FrobeniusCoords",
    "SkewShape",
    "transpose",
    "frobenius",
    "from_frobenius",
    "hook_lengths",
    "contents",
    "contains",
    "skew_cells",
    "is_horizontal_strip",
    "is_vertical_strip",
    "add_strips",
    "remove_strips",
    "partition_sum",
    "partition_union",
    "scale",
    "partitions",
    "partitions_upto",
    "random_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        seq = list(parts)
        while seq and seq[-1] == 0:
            seq.pop()
        prev = None
        for x in seq:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValidationError(f"partition entries must be integers, got {x!r}")
            if x <= 0:
                raise ValidationError(f"partition entries must be positive: {seq}")
            if prev is not None and x > prev:
                raise ValidationError(f"partition must be weakly decreasing: {seq}")
            prev = x
        return super().__new__(cls, seq)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """0-based part, with the implicit trailing zeros."""
        return self[i] if 0 <= i < len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for x in self:
            m[x] = m.get(x, 0) + 1
        return m

    def cells(self) -> list["Cell"]:
        return [Cell(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class FrobeniusCoords:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple(self.arms))
        object.__setattr__(self, "legs", tuple(self.legs))
        if len(self.arms) != len(self.legs):
            raise ValidationError("arms and legs must have the same length")
        for name, seq in (("arms", self.arms), ("legs", self.legs)):
            if any(x < 0 for x in seq):
                raise ValidationError(f"{name} must be non-negative")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValidationError(f"{name} must be strictly decreasing")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.arms))} | {','.join(map(str, self.legs))})"


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValidationError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_TOKEN = re.compile(r"^(\d+)(?:\^(\d+)|([⁰¹²³⁴⁵⁶⁷⁸⁹]+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``[5,3,2]``, ``(5,3,1^3)``, ``5,3,1³``; ``[]``/``∅`` is the zero partition."""
    s = text.strip()
    if s in ("", "∅", "0"):
        return Partition()
    if (s[0], s[-1]) in (("[", "]"), ("(", ")")):
        s = s[1:-1].strip()
    if not s:
        return Partition()
    parts: list[int] = []
    for tok in s.split(","):
        tok = tok.strip()
        m = _TOKEN.match(tok)
        if m is None:
            raise ValidationError(f"cannot parse partition entry {tok!r} in {text!r}")
        value = int(m.group(1))
        rep = m.group(2) or (m.group(3).translate(_SUPERSCRIPTS) if m.group(3) else "1")
        parts.extend([value] * int(rep))
    return Partition(parts)


@lru_cache(maxsize=65536)
def _transpose(p: tuple[int, ...]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def transpose(p: Sequence[int]) -> Partition:
    return Partition(_transpose(tuple(Partition(p))))


def frobenius(p: Sequence[int]) -> FrobeniusCoords:
    p = Partition(p)
    pt = transpose(p)
    r = sum(1 for i, x in enumerate(p) if x >= i + 1)
    # arm = boxes to the right of the diagonal box, leg = boxes below it
    return FrobeniusCoords(
        arms=tuple(p[i] - i - 1 for i in range(r)),
        legs=tuple(pt[i] - i - 1 for i in range(r)),
    )


def from_frobenius(f: FrobeniusCoords) -> Partition:
    r = f.rank
    rows = [f.arms[i] + i + 1 for i in range(r)]
    depth = max((f.legs[j] + j + 1 for j in range(r)), default=0)
    for i in range(r + 1, depth + 1):
        rows.append(sum(1 for j in range(r) if f.legs[j] + j + 1 >= i))
    return Partition(rows)


def hook_lengths(p: Sequence[int]) -> dict[Cell, int]:
    p = Partition(p)
    pt = transpose(p)
    return {
        Cell(i + 1, j + 1): (p[i] - j - 1) + (pt[j] - i - 1) + 1
        for i in range(len(p))
        for j in range(p[i])
    }


def contents(p: Sequence[int]) -> dict[Cell, int]:
    return {c: c.col - c.row for c in Partition(p).cells()}


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def skew_cells(s: SkewShape) -> list[Cell]:
    return [
        Cell(i + 1, j + 1)
        for i in range(len(s.outer))
        for j in range(s.inner.at(i), s.outer[i])
    ]


def is_horizontal_strip(s: SkewShape) -> bool:
    # interlacing: outer_{i+1} <= inner_i for all i
    return all(s.outer.at(i + 1) <= s.inner.at(i) for i in range(len(s.outer)))


def is_vertical_strip(s: SkewShape) -> bool:
    return all(s.outer[i] - s.inner.at(i) <= 1 for i in range(len(s.outer)))


def _horizontal(p: Partition, m: int) -> Iterator[tuple[int, ...]]:
    rows = list(p) + [0]
    n = len(rows)

    def rec(i: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for extra in range(cap, -1, -1):
            acc.append(rows[i] + extra)
            yield from rec(i + 1, left - extra, acc)
            acc.pop()

    yield from rec(0, m, [])


def add_strips(p: Sequence[int], m: int, orientation: str = "horizontal") -> list[Partition]:
    """All partitions obtained from ``p`` by adding an ``m``-box strip.

    Returned in lexicographically decreasing order.
    """
    if m < 0:
        raise ValidationError("strip size must be non-negative")
    p = Partition(p)
    if orientation in ("horizontal", "h"):
        out = [Partition(x) for x in _horizontal(p, m)]
    elif orientation in ("vertical", "v"):
        out = [transpose(x) for x in _horizontal(transpose(p), m)]
    else:
        raise ValidationError(f"unknown strip orientation {orientation!r}")
    return sorted(out, reverse=True)


def remove_strips(p: Sequence[int], m: int, orientation: str = "horizontal") -> list[Partition]:
    """All ``q`` with ``p/q`` a strip of size ``m``, lexicographically decreasing."""
    p = Partition(p)
    if m < 0 or m > p.size:
        return []
    out = []
    for q in partitions_upto_box(p.size - m, p):
        s = SkewShape(p, q)
        if (is_horizontal_strip(s) if orientation in ("horizontal", "h") else is_vertical_strip(s)):
            out.append(q)
    return sorted(out, reverse=True)


def partition_sum(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    lam, mu = Partition(lam), Partition(mu)
    n = max(len(lam), len(mu))
    return Partition(lam.at(i) + mu.at(i) for i in range(n))


def partition_union(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def scale(p: Sequence[int], n: int) -> Partition:
    return Partition(n * x for x in p)


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order: ``[n]`` first, ``[1^n]`` last."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(left: int, cap: int, slots: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0:
            yield Partition(acc)
            return
        if slots == 0 or cap * slots < left:
            return
        for k in range(min(left, cap), 0, -1):
            acc.append(k)
            yield from rec(left - k, k, slots - 1, acc)
            acc.pop()

    yield from rec(n, max_part, max_length, [])


def partitions_upto(n: int) -> Iterator[Partition]:
    """All partitions of size ``<= n``, by size then reverse lexicographically."""
    for k in range(n + 1):
        yield from partitions(k)


def partitions_upto_box(n: int, box: Sequence[int]) -> Iterator[Partition]:
    """Partitions of ``n`` contained in ``box``, reverse lexicographic."""
    box = list(box)

    def rec(i: int, left: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0:
            yield Partition(acc)
            return
        if i >= len(box):
            return
        hi = min(left, cap, box[i])
        room = sum(min(b, hi) for b in box[i:])
        if room < left:
            return
        for k in range(hi, 0, -1):
            acc.append(k)
            yield from rec(i + 1, left - k, k, acc)
            acc.pop()

    yield from rec(0, n, n, [])


def random_partition(n: int, rng: random.Random | None = None) -> Partition:
    """Sorted random composition of ``n`` (each of the n-1 cut points kept with probability 1/2)."""
    rng = rng or random.Random()
    if n <= 0:
        return Partition()
    parts = []
    run = 1
    for _ in range(n - 1):
        if rng.random() < 0.5:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Partition(sorted(parts, reverse=True))
