"""Finite-rank resolutions: explicit Koszul complexes and pure-resolution plans.

Koszul complexes are built degree by degree with integer matrices and checked
for exactness by exact rank computations.  Pure resolutions are never
materialized; a plan records the degree sequence and the Schur functors of the
generators, and ``validate_plan`` certifies it at the level of LR multiplicities.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .characters import dim_gl
from .errors import IntegrityError, ValidationError
from .linalg import rank as matrix_rank
from .lr import lr_coefficient
from .partitions import Partition, SkewShape, contains, is_horizontal_strip


# ---------------------------------------------------------------- pure resolutions

@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.degrees)
        if not d:
            raise ValidationError("degree sequence must be non-empty")
        if any(b <= a for a, b in zip(d, d[1:])):
            raise ValidationError(f"degree sequence must be strictly increasing: {d}")
        object.__setattr__(self, "degrees", tuple(x - d[0] for x in d))

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def gaps(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.degrees, self.degrees[1:]))


@dataclass(frozen=True)
class PureResolutionPlan:
    alpha: Partition
    beta: Partition
    n_rows: int
    e: tuple[int, ...]
    d: DegreeSequence
    shapes: tuple[Partition, ...]

    def to_json_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "n_rows": self.n_rows,
            "e": list(self.e),
            "d": list(self.d.degrees),
            "shapes": [list(s) for s in self.shapes],
        }


def efw_plan(alpha: Sequence[int], beta: Sequence[int], n_rows: int) -> PureResolutionPlan:
    alpha, beta = Partition(alpha), Partition(beta)
    if n_rows < 1:
        raise ValidationError("n_rows must be >= 1")
    if len(alpha) > n_rows:
        raise ValidationError(f"length of alpha ({len(alpha)}) exceeds n_rows ({n_rows})")
    if beta.at(0) <= alpha.at(0):
        raise ValidationError(f"need beta_1 > alpha_1, got beta_1={beta.at(0)}, alpha_1={alpha.at(0)}")
    if any(beta.at(i) != alpha.at(i) for i in range(1, max(len(alpha), len(beta)))):
        raise ValidationError("need beta_i = alpha_i for every i >= 2")
    a = [alpha.at(i) for i in range(n_rows)]
    e = [beta[0] - a[0]] + [a[i - 1] - a[i] + 1 for i in range(1, n_rows)]
    d = [0]
    for x in e:
        d.append(d[-1] + x)
    shapes = []
    for i in range(n_rows + 1):
        shapes.append(Partition([a[j] + e[j] if j < i else a[j] for j in range(n_rows)]))
    return PureResolutionPlan(alpha, beta, n_rows, tuple(e), DegreeSequence(d), tuple(shapes))


def plan_from_degree_sequence(d: DegreeSequence | Sequence[int]) -> PureResolutionPlan:
    """Invert ``efw_plan``, choosing the alpha whose last row (row n) is zero."""
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(tuple(d))
    n = len(d) - 1
    if n < 1:
        raise ValidationError("need at least two degrees")
    e = d.gaps()
    alpha = [sum(e[j] - 1 for j in range(i + 1, n)) for i in range(n)]
    beta = [alpha[0] + e[0]] + alpha[1:]
    return efw_plan(alpha, beta, n)


@dataclass
class ValidityReport:
    plan: PureResolutionPlan
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]


def validate_plan(p: PureResolutionPlan) -> ValidityReport:
    """Per step i: horizontal strip of size e_i, Pieri multiplicity one, no map two steps down."""
    report = ValidityReport(p)
    s = p.shapes
    for i in range(1, p.n_rows + 1):
        grown = contains(s[i], s[i - 1]) and s[i].size - s[i - 1].size == p.e[i - 1]
        strip = grown and is_horizontal_strip(SkewShape(s[i], s[i - 1]))
        report.checks.append({"step": i, "condition": "horizontal_strip", "ok": strip})
        c = lr_coefficient(s[i], s[i - 1], [p.e[i - 1]])
        report.checks.append({"step": i, "condition": "pieri_multiplicity_one", "ok": c == 1, "value": c})
        if i >= 2:
            gap = p.d[i] - p.d[i - 2]
            c2 = lr_coefficient(s[i], s[i - 2], [gap])
            report.checks.append({"step": i, "condition": "no_map_two_steps_down", "ok": c2 == 0, "value": c2})
    return report


def plan_betti_table(p: PureResolutionPlan, rank: int) -> list[tuple[int, int]]:
    """(d_i, dim S_{shape_i}(C^rank)) for i = 0..n."""
    if rank < 0:
        raise ValidationError("rank must be non-negative")
    return [(p.d[i], dim_gl(shape, rank)) for i, shape in enumerate(p.shapes)]


def betti_csv(table: Sequence[tuple[int, int]]) -> str:
    """Rows = homological index, columns = internal degree."""
    degrees = sorted({d for d, _ in table})
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i"] + degrees)
    for i, (d, b) in enumerate(table):
        w.writerow([i] + [b if x == d else 0 for x in degrees])
    return buf.getvalue()


def betti_text(table: Sequence[tuple[int, int]]) -> str:
    degrees = sorted({d for d, _ in table})
    rows = [["i"] + [str(x) for x in degrees]]
    for i, (d, b) in enumerate(table):
        rows.append([str(i)] + [str(b) if x == d else "." for x in degrees])
    width = max(len(c) for r in rows for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows) + "\n"


# ---------------------------------------------------------------- Koszul complexes

def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the given degree, lexicographically decreasing (x1^d first)."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == nvars - 1:
            out.append(tuple(acc + [left]))
            return
        for k in range(left, -1, -1):
            rec(i + 1, left - k, acc + [k])

    if nvars == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


def _wedges(nvars: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of range(nvars) in colexicographic order."""
    return sorted(combinations(range(nvars), k), key=lambda s: tuple(reversed(s)))


@dataclass(frozen=True)
class GradedComplex:
    """Chain complex split by internal degree.

    ``dims[D][i]`` is dim F_{i,D}; ``differentials[(i, D)]`` is the matrix of
    F_{i,D} -> F_{i-1,D} (rows index the target basis) for i >= 1.
    """

    rank: int
    max_degree: int
    dims: dict[int, list[int]]
    differentials: dict[tuple[int, int], list[list[int]]]

    def length(self) -> int:
        return max((len(v) for v in self.dims.values()), default=0)


def _koszul_degree(rank: int, D: int) -> tuple[list[int], dict[tuple[int, int], list[list[int]]]]:
    top = min(D, rank)
    bases = []
    for i in range(top + 1):
        bases.append([(m, w) for w in _wedges(rank, i) for m in _monomials(rank, D - i)])
    dims = [len(b) for b in bases]
    mats: dict[tuple[int, int], list[list[int]]] = {}
    for i in range(1, top + 1):
        index = {b: r for r, b in enumerate(bases[i - 1])}
        mat = [[0] * dims[i] for _ in range(dims[i - 1])]
        for col, (m, w) in enumerate(bases[i]):
            for k, j in enumerate(w, start=1):
                m2 = list(m)
                m2[j] += 1
                target = (tuple(m2), w[: k - 1] + w[k:])
                mat[index[target]][col] += -1 if k % 2 else 1
        mats[(i, D)] = mat
    return dims, mats


def koszul_complex(rank: int, max_internal_degree: int, jobs: int = 1) -> GradedComplex:
    """Koszul resolution of C over Sym(C^rank), internal degrees 0..max_internal_degree.

    F_{i,D} = Sym^{D-i} (x) wedge^i, differential
    m (x) v_{j1}^...^v_{ji} -> sum_k (-1)^k x_{jk} m (x) (omit v_{jk}).
    """
    if rank < 1:
        raise ValidationError("rank must be >= 1")
    if max_internal_degree < 0:
        raise ValidationError("max_internal_degree must be non-negative")
    degrees = range(max_internal_degree + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(lambda D: _koszul_degree(rank, D), degrees))
    else:
        results = [_koszul_degree(rank, D) for D in degrees]
    dims: dict[int, list[int]] = {}
    diffs: dict[tuple[int, int], list[list[int]]] = {}
    for D, (dm, mats) in zip(degrees, results):
        dims[D] = dm
        diffs.update(mats)
    return GradedComplex(rank, max_internal_degree, dims, diffs)


def koszul_generator_matrix(rank: int, i: int) -> list[list[dict[int, int]]]:
    """Differential F_i -> F_{i-1} on generators, entries as linear forms {variable: coefficient}.

    Rows index (i-1)-subsets and columns i-subsets, both colexicographic; variables are 1-based.
    """
    if not 1 <= i <= rank:
        raise ValidationError(f"homological index must be in 1..{rank}")
    rows = _wedges(rank, i - 1)
    cols = _wedges(rank, i)
    index = {w: r for r, w in enumerate(rows)}
    mat: list[list[dict[int, int]]] = [[{} for _ in cols] for _ in rows]
    for c, w in enumerate(cols):
        for k, j in enumerate(w, start=1):
            mat[index[w[: k - 1] + w[k:]]][c][j + 1] = -1 if k % 2 else 1
    return mat


def _compose_is_zero(a: list[list[int]], b: list[list[int]], inner: int) -> bool:
    """Whether a @ b vanishes, where a has ``inner`` columns and b has ``inner`` rows."""
    if not a or not b:
        return True
    ncols = len(b[0]) if b else 0
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        if not nz:
            continue
        for j in range(ncols):
            if sum(x * b[k][j] for k, x in nz):
                return False
    return True


@dataclass
class HomologyReport:
    rank: int
    max_degree: int
    homology: dict[tuple[int, int], int]  # (i, D) -> dim H_i in internal degree D, nonzero only
    ranks: dict[tuple[int, int], int]

    def is_resolution_of_residue_field(self) -> bool:
        return self.homology == {(0, 0): 1}

    def summary(self) -> str:
        higher = {k: v for k, v in self.homology.items() if k[0] >= 1}
        h0 = sorted((D, v) for (i, D), v in self.homology.items() if i == 0)
        if higher:
            first = "; ".join(f"H_{i} = {v}·(degree {D})" for (i, D), v in sorted(higher.items()))
        else:
            first = "H_i = 0 for i ≥ 1"
        second = " + ".join(f"{v}·(degree {D})" for D, v in h0) if h0 else "0"
        return f"{first}; H_0 = {second}"

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "max_degree": self.max_degree,
            "homology": [
                {"index": i, "degree": D, "dimension": v} for (i, D), v in sorted(self.homology.items())
            ],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False)


def exactness_report(c: GradedComplex) -> HomologyReport:
    """Homology dimensions by rank-nullity; raises IntegrityError if some d o d is nonzero."""
    homology: dict[tuple[int, int], int] = {}
    ranks: dict[tuple[int, int], int] = {}
    for D, dims in sorted(c.dims.items()):
        for i in range(2, len(dims)):
            a = c.differentials.get((i - 1, D))
            b = c.differentials.get((i, D))
            if a is not None and b is not None and not _compose_is_zero(a, b, dims[i - 1]):
                raise IntegrityError(f"d_{i - 1} o d_{i} is nonzero in internal degree {D}")
        r = [0] * (len(dims) + 1)
        for i in range(1, len(dims)):
            mat = c.differentials.get((i, D))
            r[i] = matrix_rank(mat) if mat and dims[i] and dims[i - 1] else 0
            ranks[(i, D)] = r[i]
        for i, dim in enumerate(dims):
            h = dim - r[i] - r[i + 1]
            if h < 0:
                raise IntegrityError(f"negative homology at ({i}, {D})")
            if h:
                homology[(i, D)] = h
    return HomologyReport(c.rank, c.max_degree, homology, ranks)
