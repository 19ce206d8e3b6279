"""Symmetric group characters, dimension formulas and Kronecker coefficients."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .errors import ResourceLimitError, ValidationError
from .linalg import det
from .partitions import Partition, contents, hook_lengths, partitions

DEFAULT_MAX_TABLE_N = 14


@dataclass(frozen=True)
class ClassPartition:
    """Cycle type of a conjugacy class of S_n."""

    cycle_type: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycle_type", Partition(self.cycle_type))

    @property
    def n(self) -> int:
        return self.cycle_type.size


def z(rho: Sequence[int]) -> int:
    """Centralizer order prod_i i^{m_i} m_i! of an element of cycle type rho."""
    return prod(i**m * factorial(m) for i, m in Partition(rho).multiplicities().items())


def class_size(rho: Sequence[int]) -> int:
    return factorial(Partition(rho).size) // z(rho)


def sign(rho: Sequence[int]) -> int:
    """Sign of a permutation of cycle type rho."""
    return -1 if sum(r - 1 for r in rho) % 2 else 1


def _beta(lam: tuple[int, ...], k: int) -> list[int]:
    return [lam[i] + k - 1 - i if i < len(lam) else k - 1 - i for i in range(k)]


def _from_beta(beads: list[int]) -> tuple[int, ...]:
    k = len(beads)
    desc = sorted(beads, reverse=True)
    parts = [desc[i] - (k - 1 - i) for i in range(k)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r = rho[0]
    rest = rho[1:]
    k = len(lam)
    beads = _beta(lam, k)
    occupied = set(beads)
    total = 0
    # removing a border strip of length r = sliding a bead from b to b - r
    for idx, b in enumerate(beads):
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beads if t < x < b)
        moved = beads[:idx] + [t] + beads[idx + 1:]
        term = _mn(_from_beta(moved), rest)
        total += -term if height % 2 else term
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int] | ClassPartition) -> int:
    """Character of the lam-irreducible of S_n on the class of cycle type rho."""
    if isinstance(rho, ClassPartition):
        rho = rho.cycle_type
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValidationError(f"|{lam}| = {lam.size} but class {rho} has size {rho.size}")
    return _mn(tuple(lam), tuple(rho))


def dim_sym_hook(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam).values())


def dim_sym_det(lam: Sequence[int]) -> int:
    """n! det(1/(lam_i - i + j)!), with row i scaled by (lam_i - i + k)! to stay integral."""
    lam = Partition(lam)
    k = len(lam)
    if k == 0:
        return 1
    rows = []
    scale = 1
    for i in range(1, k + 1):
        top = lam[i - 1] - i + k
        scale *= factorial(top)
        row = []
        for j in range(1, k + 1):
            low = lam[i - 1] - i + j
            row.append(factorial(top) // factorial(low) if low >= 0 else 0)
        rows.append(row)
    num = factorial(lam.size) * det(rows)
    q, r = divmod(num, scale)
    if r:
        raise ArithmeticError(f"determinantal dimension of {lam} is not integral")
    return int(q)


def dim_sym(lam: Sequence[int]) -> int:
    return _dim_sym_cached(tuple(Partition(lam)))


@lru_cache(maxsize=None)
def _dim_sym_cached(lam: tuple[int, ...]) -> int:
    return dim_sym_hook(lam)


def dim_gl(lam: Sequence[int], n: int) -> int:
    """Dimension of the lam-Schur functor applied to C^n (hook-content formula)."""
    if n < 0:
        raise ValidationError("rank must be non-negative")
    return _dim_gl(tuple(Partition(lam)), n)


@lru_cache(maxsize=None)
def _dim_gl(lam: tuple[int, ...], n: int) -> int:
    if len(lam) > n:
        return 0
    num = prod(n + c for c in contents(lam).values())
    den = prod(hook_lengths(lam).values())
    return num // den


@lru_cache(maxsize=4096)
def _classes(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of the nu-irreducible in the pointwise tensor product of lam and mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        return 0
    a, b, c = sorted((tuple(lam), tuple(mu), tuple(nu)))
    return _kronecker(a, b, c)


@lru_cache(maxsize=200_000)
def _kronecker(a: tuple[int, ...], b: tuple[int, ...], c: tuple[int, ...]) -> int:
    n = sum(a)
    nf = factorial(n)
    total = 0
    for rho in _classes(n):
        t = _mn(a, rho) * _mn(b, rho)
        if t:
            total += t * _mn(c, rho) * (nf // z(rho))
    q, r = divmod(total, nf)
    if r:
        raise ArithmeticError("Kronecker coefficient is not integral")
    return q


@dataclass(frozen=True)
class CharacterTable:
    n: int
    irreps: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: dict = field(repr=False)

    def __call__(self, lam: Sequence[int], rho: Sequence[int]) -> int:
        return self.values[(Partition(lam), Partition(rho))]

    def row(self, lam: Sequence[int]) -> list[int]:
        lam = Partition(lam)
        return [self.values[(lam, rho)] for rho in self.classes]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["irrep"] + [str(rho) for rho in self.classes])
        for lam in self.irreps:
            w.writerow([str(lam)] + self.row(lam))
        return buf.getvalue()


def character_table(n: int, max_n: int = DEFAULT_MAX_TABLE_N) -> CharacterTable:
    if n < 0:
        raise ValidationError("n must be non-negative")
    if n > max_n:
        raise ResourceLimitError(f"character table for n={n} exceeds the configured bound {max_n}")
    parts = _classes(n)
    values = {(lam, rho): _mn(tuple(lam), tuple(rho)) for lam in parts for rho in parts}
    return CharacterTable(n, parts, parts, values)
