"""Polynomial twisted commutative algebras through their truncated decompositions."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .characters import dim_gl
from .errors import ValidationError
from .partitions import Partition, partitions
from .vcat import VObject, compose, evaluate_at_rank, sym_truncated


@dataclass(frozen=True)
class PolynomialTcaSpec:
    """Sym(F) for a finite object F without degree-0 part.

    ``aux_dimension`` marks the degree-1 case F = U<1> with dim U given.
    """

    generators: VObject
    aux_dimension: int | None = None

    def __post_init__(self) -> None:
        if self.generators.truncation_degree is not None:
            raise ValidationError("generators of a polynomial tca must be a finite object")
        if self.generators[Partition()]:
            raise ValidationError("generators of a polynomial tca must have no degree-0 part")
        if self.aux_dimension is not None:
            if self.aux_dimension < 0:
                raise ValidationError("aux_dimension must be non-negative")
            if self.generators != VObject({Partition([1]): self.aux_dimension}):
                raise ValidationError("aux_dimension is only meaningful for generators U<1>")

    @classmethod
    def sym_u1(cls, u: int) -> "PolynomialTcaSpec":
        """Sym(U<1>) with dim U = u."""
        return cls(VObject({Partition([1]): u}), aux_dimension=u)

    @classmethod
    def sym_regular(cls, k: int) -> "PolynomialTcaSpec":
        """Sym(C<k>)."""
        from .vcat import regular

        if k < 1:
            raise ValidationError("k must be positive")
        return cls(regular(k))

    def cauchy_dimension(self) -> int | None:
        """dim U when the generators are U<1>, whether or not aux_dimension was given."""
        if self.aux_dimension is not None:
            return self.aux_dimension
        if set(self.generators) == {Partition([1])}:
            return self.generators[[1]]
        return None


@dataclass(frozen=True)
class FreeModuleSpec:
    """A (x) G(twist): generators G placed in internal degree ``-twist``."""

    tca: PolynomialTcaSpec
    generator_object: VObject
    twist: int = 0

    def __post_init__(self) -> None:
        if self.generator_object.truncation_degree is not None:
            raise ValidationError("generator object must be finite")


def tca_decompose(spec: PolynomialTcaSpec, max_degree: int, generic: bool = False) -> VObject:
    """Sym(F) through degree ``max_degree``.

    Generators U<1> use the Cauchy decomposition directly unless ``generic`` is set;
    everything else goes through plethysm with the truncated symmetric algebra.
    """
    if max_degree < 0:
        raise ValidationError("max_degree must be non-negative")
    u = spec.cauchy_dimension()
    if u is not None and not generic:
        terms = {
            lam: dim_gl(lam, u)
            for d in range(max_degree + 1)
            for lam in partitions(d, max_length=u)
        }
        return VObject(terms, max_degree)
    low = spec.generators.min_degree()
    if low is None:
        return VObject({Partition(): 1}, max_degree)
    out = compose(sym_truncated(max_degree // low), spec.generators, max_degree)
    return out.with_truncation(max_degree)


def hypermatching_count(k: int, n: int) -> int:
    """Perfect directed k-uniform hypermatchings on kn points: (kn)!/n!."""
    if k < 1 or n < 0:
        raise ValidationError("need k >= 1 and n >= 0")
    return factorial(k * n) // factorial(n)


def koszul_generators(n_terms: int) -> list[VObject]:
    """Generator objects of the Koszul resolution of C over Sym(C<1>): exterior powers of C<1>."""
    if n_terms < 1:
        raise ValidationError("n_terms must be >= 1")
    return [VObject({Partition([1] * i): 1}) for i in range(n_terms)]


def free_module_hilbert(spec: FreeModuleSpec, rank: int, order: int) -> list[int]:
    """Dimension of (A (x) G)(C^rank) in internal degrees 0..order.

    The tca part contributes in its own degree; the whole generator object sits in
    internal degree ``-twist``.
    """
    if order < 0:
        raise ValidationError("order must be non-negative")
    shift = -spec.twist
    out = [0] * (order + 1)
    gen_dim = evaluate_at_rank(spec.generator_object, rank)
    if gen_dim == 0 or shift > order:
        return out
    top = order - shift
    algebra = tca_decompose(spec.tca, max(top, 0))
    by_degree = [0] * (top + 1)
    for lam, c in algebra.items():
        if lam.size <= top:
            by_degree[lam.size] += c * dim_gl(lam, rank)
    for a in range(top + 1):
        d = a + shift
        if d >= 0:
            out[d] = by_degree[a] * gen_dim
    return out
