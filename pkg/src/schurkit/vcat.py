"""Isomorphism classes in the category of polynomial functors.

An object is a finite non-negative combination of simple objects ``S_lam``,
graded by ``|lam|``.  Infinite objects (``Sym`` of something, say) only ever
exist as truncations: ``truncation_degree = D`` means the combination is exact
in degrees ``<= D`` and unknown above.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from . import symfun
from .characters import _classes, _mn, dim_gl, dim_sym, kronecker
from .errors import ValidationError
from .lr import lr_coefficient, tensor_expand
from .partitions import Partition, partitions, partitions_upto_box, transpose

DEFAULT_MAX_DEGREE = 12


def sort_key(p: Partition) -> tuple:
    """Degree first, then reverse lexicographic within a degree."""
    return (p.size, tuple(-x for x in p))


def _min_trunc(*degrees: int | None) -> int | None:
    known = [d for d in degrees if d is not None]
    return min(known) if known else None


class _Combination:
    """Integer combination of simple objects; subclasses fix the sign policy."""

    __slots__ = ("_terms", "truncation_degree")
    _signed = False

    def __init__(self, terms: Mapping | Iterable = (), truncation_degree: int | None = None) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValidationError(f"non-integral multiplicity {c} for {lam}")
                c = int(c)
            if not isinstance(c, int):
                raise ValidationError(f"multiplicity must be an integer, got {c!r}")
            if truncation_degree is not None and lam.size > truncation_degree:
                continue
            acc[lam] = acc.get(lam, 0) + c
        if not self._signed and any(c < 0 for c in acc.values()):
            raise ValidationError("negative multiplicity in a non-virtual object")
        if truncation_degree is not None and truncation_degree < 0:
            raise ValidationError("truncation degree must be non-negative")
        self._terms = {k: acc[k] for k in sorted(acc, key=sort_key) if acc[k]}
        self.truncation_degree = truncation_degree

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self._terms.get(Partition(lam), 0)

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(self._terms.items())

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def support(self) -> list[Partition]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Combination):
            return NotImplemented
        return self._terms == other._terms and self.truncation_degree == other.truncation_degree

    def __hash__(self) -> int:
        return hash((tuple(self._terms.items()), self.truncation_degree))

    def same_terms(self, other: "_Combination") -> bool:
        """Equality of the combinations, ignoring truncation metadata."""
        return self._terms == other._terms

    def degrees(self) -> list[int]:
        return sorted({lam.size for lam in self._terms})

    def max_degree(self) -> int:
        return max((lam.size for lam in self._terms), default=0)

    def min_degree(self) -> int | None:
        return min((lam.size for lam in self._terms), default=None)

    def degree_piece(self, d: int):
        return type(self)({lam: c for lam, c in self._terms.items() if lam.size == d})

    def truncate(self, degree: int):
        """Keep degrees <= degree and record the truncation."""
        return type(self)(self._terms, _min_trunc(degree, self.truncation_degree))

    def with_truncation(self, degree: int | None):
        return type(self)(self._terms, degree)

    def _combine(self, other: "_Combination", sign: int, cls):
        acc = dict(self._terms)
        for lam, c in other.items():
            acc[lam] = acc.get(lam, 0) + sign * c
        return cls(acc, _min_trunc(self.truncation_degree, other.truncation_degree))

    def __add__(self, other: "_Combination"):
        if not isinstance(other, _Combination):
            return NotImplemented
        cls = VirtualVObject if (self._signed or other._signed) else VObject
        return self._combine(other, 1, cls)

    def __sub__(self, other: "_Combination") -> "VirtualVObject":
        if not isinstance(other, _Combination):
            return NotImplemented
        return self._combine(other, -1, VirtualVObject)

    def __rmul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0 and not self._signed:
            return VirtualVObject({lam: k * c for lam, c in self._terms.items()}, self.truncation_degree)
        return type(self)({lam: k * c for lam, c in self._terms.items()}, self.truncation_degree)

    def __str__(self) -> str:
        if not self._terms:
            body = "0"
        else:
            pieces = []
            for lam, c in self._terms.items():
                pieces.append(f"S{lam}" if c == 1 else f"{c}*S{lam}")
            body = " + ".join(pieces).replace("+ -", "- ")
        if self.truncation_degree is not None:
            body += f" + O(deg>{self.truncation_degree})"
        return body

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_json_dict(self) -> dict:
        return {
            "truncation_degree": self.truncation_degree,
            "terms": [{"partition": list(lam), "multiplicity": str(c)} for lam, c in self._terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping):
        terms = [(Partition(t["partition"]), int(t["multiplicity"])) for t in data["terms"]]
        return cls(terms, data.get("truncation_degree"))

    @classmethod
    def from_json(cls, text: str):
        return cls.from_json_dict(json.loads(text))


class VObject(_Combination):
    """Non-negative combination of simple objects (an actual object, up to isomorphism)."""

    __slots__ = ()


class VirtualVObject(_Combination):
    """Signed combination: a class in the Grothendieck group."""

    __slots__ = ()
    _signed = True


class BiVObject:
    """Combination of external products S_mu x S_nu in the two-variable category."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[Partition, Partition], int] = {}
        for (a, b), c in items:
            key = (Partition(a), Partition(b))
            acc[key] = acc.get(key, 0) + c
        if any(c < 0 for c in acc.values()):
            raise ValidationError("negative multiplicity")
        order = sorted(acc, key=lambda k: (k[0].size + k[1].size, sort_key(k[0]), sort_key(k[1])))
        self._terms = {k: acc[k] for k in order if acc[k]}

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> int:
        return self._terms.get((Partition(key[0]), Partition(key[1])), 0)

    def items(self):
        return iter(self._terms.items())

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiVObject):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        inner = " + ".join(
            (f"{c}*" if c != 1 else "") + f"(S{a} x S{b})" for (a, b), c in self._terms.items()
        )
        return f"BiVObject({inner or '0'})"

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"left": list(a), "right": list(b), "multiplicity": str(c)}
                for (a, b), c in self._terms.items()
            ]
        }


# ---------------------------------------------------------------- constructors

def simple(lam: Sequence[int]) -> VObject:
    return VObject({Partition(lam): 1})


def zero() -> VObject:
    return VObject()


def regular(n: int) -> VObject:
    """C<n>: the regular representation of S_n placed in degree n."""
    if n < 0:
        raise ValidationError("degree must be non-negative")
    return VObject({lam: dim_sym(lam) for lam in partitions(n)})


def sym_truncated(max_degree: int) -> VObject:
    """The symmetric algebra functor sum_n Sym^n, through degree ``max_degree``."""
    return VObject({Partition([n] if n else []): 1 for n in range(max_degree + 1)}, max_degree)


def dual(v: VObject) -> VObject:
    """Duality acts trivially on isomorphism classes of graded-finite objects."""
    return v


def _check_object(v: _Combination) -> None:
    if not isinstance(v, _Combination):
        raise ValidationError(f"expected a VObject, got {type(v).__name__}")


# ---------------------------------------------------------------- products

def tensor(v: _Combination, w: _Combination) -> _Combination:
    _check_object(v)
    _check_object(w)
    trunc = _min_trunc(v.truncation_degree, w.truncation_degree)
    acc: dict[Partition, int] = {}
    for lam, a in v.items():
        for mu, b in w.items():
            if trunc is not None and lam.size + mu.size > trunc:
                continue
            for nu, c in tensor_expand(lam, mu).items():
                acc[nu] = acc.get(nu, 0) + a * b * c
    cls = VirtualVObject if (v._signed or w._signed) else VObject
    return cls(acc, trunc)


def pointwise_tensor(v: VObject, w: VObject) -> VObject:
    """Degreewise (Kronecker) tensor product; pieces of different degrees multiply to zero."""
    _check_object(v)
    _check_object(w)
    acc: dict[Partition, int] = {}
    for lam, a in v.items():
        for mu, b in w.items():
            if lam.size != mu.size:
                continue
            for nu in _classes(lam.size):
                g = kronecker(lam, mu, nu)
                if g:
                    acc[nu] = acc.get(nu, 0) + a * b * g
    return VObject(acc, _min_trunc(v.truncation_degree, w.truncation_degree))


def coaddition(v: VObject) -> BiVObject:
    """a*(S_lam) = sum c^lam_{mu,nu} S_mu x S_nu."""
    acc: dict = {}
    for lam, a in v.items():
        for mu_size in range(lam.size + 1):
            for mu in partitions_upto_box(mu_size, lam):
                for nu in partitions_upto_box(lam.size - mu_size, lam):
                    c = lr_coefficient(lam, mu, nu)
                    if c:
                        acc[(mu, nu)] = acc.get((mu, nu), 0) + a * c
    return BiVObject(acc)


def comultiplication(v: VObject) -> BiVObject:
    """m*(S_lam) = sum g_{lam,mu,nu} S_mu x S_nu over mu, nu of the same size."""
    acc: dict = {}
    for lam, a in v.items():
        for mu in _classes(lam.size):
            for nu in _classes(lam.size):
                g = kronecker(lam, mu, nu)
                if g:
                    acc[(mu, nu)] = acc.get((mu, nu), 0) + a * g
    return BiVObject(acc)


# ---------------------------------------------------------------- composition

def compose(w: VObject, v: VObject, max_degree: int = DEFAULT_MAX_DEGREE, allow_constant: bool = False) -> VObject:
    """Plethysm ``w o v`` through degree ``max_degree``.

    ``v`` may only have a degree-0 part when ``allow_constant`` is set and ``w``
    is finite; otherwise every degree of ``w`` would feed degree 0.
    """
    _check_object(w)
    _check_object(v)
    if max_degree < 0:
        raise ValidationError("max_degree must be non-negative")
    has_constant = v[Partition()] != 0
    if has_constant and not allow_constant:
        raise ValidationError("inner object has a degree-0 term; pass allow_constant=True to compose anyway")
    if has_constant and w.truncation_degree is not None:
        raise ValidationError("cannot compose a truncated outer object with an inner object that has a degree-0 term")

    trunc: int | None = max_degree
    low = v.min_degree()
    if v.truncation_degree is None and w.truncation_degree is None:
        if w.max_degree() * v.max_degree() <= max_degree:
            trunc = None
    if v.truncation_degree is not None:
        trunc = min(trunc, v.truncation_degree)
    if w.truncation_degree is not None and low:
        trunc = min(trunc, (w.truncation_degree + 1) * low - 1)
    bound = max_degree if trunc is None else trunc

    outer = symfun.schur_to_power(dict(w.items()))
    inner = symfun.schur_to_power(dict(v.items()))
    result = symfun.power_to_schur(symfun.plethysm_power(outer, inner, bound))
    for lam, c in result.items():
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"plethysm produced a non-integral or negative coefficient {c} at {lam}")
    return VObject({lam: int(c) for lam, c in result.items()}, trunc)


def matchings(n: int) -> VObject:
    """Permutation representation on perfect matchings of 2n points: sum over lam |- n of S_{2lam}."""
    if n < 0:
        raise ValidationError("n must be non-negative")
    return VObject({Partition(2 * x for x in lam): 1 for lam in partitions(n)})


# ---------------------------------------------------------------- transpose

def transpose_object(v: _Combination) -> _Combination:
    return type(v)({transpose(lam): c for lam, c in v.items()}, v.truncation_degree)


def compose_transpose(w: VObject, v: VObject, max_degree: int = DEFAULT_MAX_DEGREE) -> VObject:
    """(w o v)^T through the parity rule: w o v^T for even v, w^T o v^T for odd v."""
    parities = {d % 2 for d in v.degrees()}
    if len(parities) > 1:
        raise ValidationError("inner object must be concentrated in degrees of a single parity")
    if parities == {1}:
        return compose(transpose_object(w), transpose_object(v), max_degree)
    return compose(w, transpose_object(v), max_degree)


# ---------------------------------------------------------------- derivatives

def higher_derivative(nu: Sequence[int], v: _Combination) -> _Combination:
    """D_nu: coefficient of S_mu in D_nu(S_lam) is c^lam_{mu,nu}."""
    nu = Partition(nu)
    k = nu.size
    if v.truncation_degree is not None and v.truncation_degree < k:
        raise ValidationError(f"object truncated at degree {v.truncation_degree} has no known part after removing {k} boxes")
    acc: dict[Partition, int] = {}
    for lam, a in v.items():
        if lam.size < k:
            continue
        for mu in partitions_upto_box(lam.size - k, lam):
            c = lr_coefficient(lam, mu, nu)
            if c:
                acc[mu] = acc.get(mu, 0) + a * c
    trunc = None if v.truncation_degree is None else v.truncation_degree - k
    return type(v)(acc, trunc)


def schur_derivative(v: _Combination) -> _Combination:
    return higher_derivative(Partition([1]), v)


# ---------------------------------------------------------------- finite rank and boundedness

def evaluate_at_rank(v: _Combination, n: int) -> int:
    """Dimension of the functor applied to C^n."""
    return sum(c * dim_gl(lam, n) for lam, c in v.items())


def ell(v: _Combination) -> int:
    """Largest number of rows over the support (of the truncation, if truncated)."""
    return max((len(lam) for lam in v), default=0)


def truncate_rows(v: _Combination, n: int) -> _Combination:
    return type(v)({lam: c for lam, c in v.items() if len(lam) <= n}, v.truncation_degree)


def degree_dimensions(v: _Combination, order: int) -> list[int]:
    """dim of the S_n-representation in each degree 0..order."""
    out = [0] * (order + 1)
    for lam, c in v.items():
        if lam.size <= order:
            out[lam.size] += c * dim_sym(lam)
    return out


def _check_order(v: _Combination, order: int) -> None:
    if order < 0:
        raise ValidationError("order must be non-negative")
    if v.truncation_degree is not None and order > v.truncation_degree:
        raise ValidationError(f"order {order} exceeds the truncation degree {v.truncation_degree}")


def hilbert_series(v: _Combination, order: int) -> list[Fraction]:
    """Coefficients of t^n in sum_n dim(V_n) t^n / n!, for n <= order."""
    _check_order(v, order)
    return [Fraction(d, math.factorial(n)) for n, d in enumerate(degree_dimensions(v, order))]


def class_factorial(rho: Sequence[int]) -> int:
    """prod_i m_i(rho)!"""
    return math.prod(math.factorial(m) for m in Partition(rho).multiplicities().values())


def enhanced_hilbert(v: _Combination, order: int) -> dict[Partition, Fraction]:
    """Coefficient of t^rho: trace of the class c_rho on V, divided by prod m_i(rho)!."""
    _check_order(v, order)
    out: dict[Partition, Fraction] = {}
    for n in range(order + 1):
        piece = [(lam, c) for lam, c in v.items() if lam.size == n]
        if not piece:
            continue
        for rho in _classes(n):
            trace = sum(c * _mn(tuple(lam), tuple(rho)) for lam, c in piece)
            if trace:
                out[rho] = Fraction(trace, class_factorial(rho))
    return out


def enhanced_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction], order: int) -> dict[Partition, Fraction]:
    """Product of enhanced Hilbert series; t^rho t^sigma = t^(rho union sigma)."""
    out: dict[Partition, Fraction] = {}
    for ra, ca in a.items():
        for rb, cb in b.items():
            if ra.size + rb.size > order:
                continue
            key = Partition(sorted(ra + rb, reverse=True))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def parse_object(text: str) -> VObject:
    """Parse ``2*[2,1] + [3]`` (or JSON in the decomposition schema)."""
    s = text.strip()
    if s.startswith("{"):
        return VObject.from_json(s)
    if s in ("", "0"):
        return VObject()
    acc: dict[Partition, int] = {}
    depth = 0
    pieces, cur = [], []
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "+" and depth == 0:
            pieces.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    pieces.append("".join(cur))
    for piece in pieces:
        piece = piece.strip()
        coef = 1
        if "*" in piece:
            head, piece = piece.split("*", 1)
            try:
                coef = int(head.strip())
            except ValueError as exc:
                raise ValidationError(f"bad multiplicity {head!r}") from exc
        piece = piece.strip()
        if piece.startswith("S"):
            piece = piece[1:]
        lam = Partition.parse(piece)
        acc[lam] = acc.get(lam, 0) + coef
    return VObject(acc)
