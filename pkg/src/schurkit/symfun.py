"""Power-sum expansions and plethysm of Schur-positive combinations.

Conversions use ``s_lam = sum_rho chi_lam(rho) / z_rho * p_rho`` and its inverse
``p_rho = sum_lam chi_lam(rho) s_lam``.  Plethysm uses ``p_k[p_m] = p_{km}``,
linearity in the outer argument, and multiplicativity of ``p_k[-]``.
Coefficients are exact ``Fraction`` values throughout.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .characters import _classes, _mn, z
from .partitions import Partition

PowerSum = dict  # Partition -> Fraction


def schur_to_power(terms: Mapping[Partition, int]) -> PowerSum:
    out: PowerSum = {}
    for lam, c in terms.items():
        for rho, v in _schur_to_power_single(lam).items():
            out[rho] = out.get(rho, 0) + c * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=4096)
def _schur_to_power_single(lam: Partition) -> dict:
    out = {}
    for rho in _classes(lam.size):
        chi = _mn(tuple(lam), tuple(rho))
        if chi:
            out[rho] = Fraction(chi, z(rho))
    return out


def power_to_schur(p: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    by_degree: dict[int, list] = {}
    for rho, c in p.items():
        by_degree.setdefault(rho.size, []).append((rho, c))
    for n, items in by_degree.items():
        for lam in _classes(n):
            v = sum((c * _mn(tuple(lam), tuple(rho)) for rho, c in items), Fraction(0))
            if v:
                out[lam] = v
    return out


def _mul(a: PowerSum, b: PowerSum, max_degree: int) -> PowerSum:
    out: PowerSum = {}
    for ra, ca in a.items():
        for rb, cb in b.items():
            if ra.size + rb.size > max_degree:
                continue
            key = Partition(sorted(ra + rb, reverse=True))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _adams(p: PowerSum, k: int, max_degree: int) -> PowerSum:
    """p_k[f]: scale every part of every power-sum index by k."""
    return {Partition(k * x for x in rho): c for rho, c in p.items() if k * rho.size <= max_degree}


def plethysm_power(outer: PowerSum, inner: PowerSum, max_degree: int) -> PowerSum:
    """outer[inner] in the power-sum basis, truncated above ``max_degree``."""
    adams_cache: dict[int, PowerSum] = {}
    prod_cache: dict[tuple[int, ...], PowerSum] = {(): {Partition(): Fraction(1)}}

    def adams(k: int) -> PowerSum:
        if k not in adams_cache:
            adams_cache[k] = _adams(inner, k, max_degree)
        return adams_cache[k]

    def product(rho: tuple[int, ...]) -> PowerSum:
        if rho not in prod_cache:
            prod_cache[rho] = _mul(product(rho[:-1]), adams(rho[-1]), max_degree)
        return prod_cache[rho]

    out: PowerSum = {}
    for rho, c in outer.items():
        for key, v in product(tuple(rho)).items():
            out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}
