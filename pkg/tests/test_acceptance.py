"""Acceptance criteria, one test per criterion.

Run under pytest (a PASS/FAIL summary is printed at the end) or directly with
``python3 tests/test_acceptance.py``.
"""
import os
import random
import sys
import time
from fractions import Fraction
from math import factorial

sys.path.insert(0, os.path.dirname(__file__))

from oracles import binomial, induced_plethysm, wreath_class_sums  # noqa: E402
from schurkit import _backend  # noqa: E402
from schurkit.cache import clear_caches  # noqa: E402
from schurkit.characters import (  # noqa: E402
    character_table,
    dim_gl,
    dim_sym,
    dim_sym_det,
    dim_sym_hook,
    kronecker,
    mn_character,
    sign,
    z,
)
from schurkit.lr import lr_coefficient, lr_tableaux, pieri, reading_word, stretched_coefficient, tensor_expand  # noqa: E402
from schurkit.partitions import (  # noqa: E402
    Partition,
    contains,
    partition_sum,
    partition_union,
    partitions,
    random_partition,
    transpose,
)
from schurkit.resolutions import (  # noqa: E402
    efw_plan,
    exactness_report,
    koszul_complex,
    koszul_generator_matrix,
    plan_betti_table,
    plan_from_degree_sequence,
    validate_plan,
)
from schurkit.tca import PolynomialTcaSpec, tca_decompose  # noqa: E402
from schurkit.vcat import (  # noqa: E402
    VObject,
    compose,
    ell,
    enhanced_hilbert,
    enhanced_product,
    higher_derivative,
    hilbert_series,
    matchings,
    regular,
    schur_derivative,
    simple,
    tensor,
)

SEED = 314159


def _random_object(rng: random.Random, max_size: int = 4, max_terms: int = 3, min_size: int = 0) -> VObject:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        lam = random_partition(rng.randint(min_size, max_size), rng)
        terms[lam] = terms.get(lam, 0) + rng.randint(1, 3)
    return VObject(terms)


def _timed(limit: float):
    def wrap(fn):
        def run():
            t0 = time.perf_counter()
            fn()
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


# 1 ---------------------------------------------------------------------------

@_timed(1.0)
def test_c01_lr_golden_value():
    nu, lam, mu = [5, 3, 2, 1], [3, 1], [4, 2, 1]
    kernels = [_backend.python_count_lr] + ([_backend.compiled_count_lr] if _backend.compiled_count_lr else [])
    for k in kernels:
        assert k(tuple(nu), tuple(lam), tuple(mu)) == 3
        assert k(tuple(nu), tuple(mu), tuple(lam)) == 3
    assert lr_coefficient(nu, lam, mu) == 3
    assert lr_coefficient(nu, mu, lam) == 3
    words = sorted(reading_word(f) for f in lr_tableaux(nu, lam, mu))
    assert words == ["1111223", "1121213", "1121312"]


# 2 ---------------------------------------------------------------------------

def test_c02_dimension_goldens():
    assert dim_sym_hook([5, 3, 2]) == 450
    assert dim_sym_det([5, 3, 2]) == 450
    assert dim_gl([4, 2, 1], 6) == 2520


# 3 ---------------------------------------------------------------------------

def test_c03_pieri_goldens():
    induced = pieri([2, 2, 1], 1)
    assert set(induced) == {Partition([3, 2, 1]), Partition([2, 2, 2]), Partition([2, 2, 1, 1])}
    assert set(induced.values()) == {1}
    two = pieri([2, 2, 1], 2)
    expected = {Partition(p) for p in ([4, 2, 1], [3, 2, 2], [3, 2, 1, 1], [2, 2, 2, 1])}
    assert set(two) == expected
    assert set(two.values()) == {1}
    # same answer from the general coefficient
    for nu in partitions(7):
        assert lr_coefficient(nu, [2, 2, 1], [2]) == (1 if nu in expected else 0)


# 4 ---------------------------------------------------------------------------

@_timed(5.0)
def test_c04_schur_weyl_dimension_audit():
    for n in range(1, 5):
        for k in range(0, 7):
            total = sum(dim_sym(lam) * dim_gl(lam, n) for lam in partitions(k, max_length=n))
            assert total == n**k, (n, k)


# 5 ---------------------------------------------------------------------------

def _lr_properties(nu, lam, mu, stretch: bool) -> list[str]:
    bad = []
    c = lr_coefficient(nu, lam, mu)
    if c != lr_coefficient(nu, mu, lam):
        bad.append("symmetry")
    if c != lr_coefficient(transpose(nu), transpose(lam), transpose(mu)):
        bad.append("transpose")
    if c and not (contains(nu, lam) and contains(nu, mu) and nu.size == lam.size + mu.size):
        bad.append("support")
    if stretch:
        c2 = stretched_coefficient(nu, lam, mu, 2)
        c3 = stretched_coefficient(nu, lam, mu, 3)
        if not c <= c2 <= c3:
            bad.append(f"stretching {c} {c2} {c3}")
    return bad


@_timed(60.0)
def test_c05_lr_property_sweep():
    violations = []
    # exhaustive part
    for s in range(0, 9):
        for a in range(0, s + 1):
            for lam in partitions(a):
                for mu in partitions(s - a):
                    if lr_coefficient(partition_sum(lam, mu), lam, mu) != 1:
                        violations.append(("sum", lam, mu))
                    if lr_coefficient(partition_union(lam, mu), lam, mu) != 1:
                        violations.append(("union", lam, mu))
                    expansion = tensor_expand(lam, mu)
                    for nu in partitions(s):
                        c = lr_coefficient(nu, lam, mu)
                        if expansion.get(nu, 0) != c:
                            violations.append(("expansion", nu, lam, mu))
                        for b in _lr_properties(nu, lam, mu, stretch=bool(c)):
                            violations.append((b, nu, lam, mu))
    # random part
    rng = random.Random(SEED)
    for _ in range(500):
        total = rng.randint(2, 14)
        a = rng.randint(0, total)
        lam = random_partition(a, rng)
        mu = random_partition(total - a, rng)
        support = sorted(tensor_expand(lam, mu))
        nu = rng.choice(support) if rng.random() < 0.5 else random_partition(total, rng)
        for b in _lr_properties(nu, lam, mu, stretch=True):
            violations.append((b, nu, lam, mu))
        if lr_coefficient(partition_sum(lam, mu), lam, mu) != 1 or lr_coefficient(partition_union(lam, mu), lam, mu) != 1:
            violations.append(("sum/union", lam, mu))
    assert not violations, violations[:10]


# 6 ---------------------------------------------------------------------------

@_timed(30.0)
def test_c06_character_suite():
    for n in range(0, 9):
        t = character_table(n)
        classes, irreps = t.classes, t.irreps
        for lam in irreps:
            for mu in irreps:
                inner = sum(Fraction(t(lam, rho) * t(mu, rho), z(rho)) for rho in classes)
                assert inner == (1 if lam == mu else 0), (lam, mu)
        for rho in classes:
            for sigma in classes:
                col = sum(t(lam, rho) * t(lam, sigma) for lam in irreps)
                assert col == (z(rho) if rho == sigma else 0), (rho, sigma)
        assert sum(t(lam, [1] * n) ** 2 for lam in irreps) == factorial(n)
        for lam in irreps:
            for rho in classes:
                assert t(transpose(lam), rho) == sign(rho) * t(lam, rho)


# 7 ---------------------------------------------------------------------------

def test_c07_kronecker_suite():
    for n in range(0, 9):
        ps = list(partitions(n))
        for lam in ps:
            for mu in ps:
                total = 0
                for nu in ps:
                    g = kronecker(lam, mu, nu)
                    for perm in ((lam, nu, mu), (mu, lam, nu), (mu, nu, lam), (nu, lam, mu), (nu, mu, lam)):
                        assert kronecker(*perm) == g
                    assert kronecker(transpose(lam), transpose(mu), nu) == g
                    assert kronecker(transpose(lam), mu, transpose(nu)) == g
                    total += g * dim_sym(nu)
                assert total == dim_sym(lam) * dim_sym(mu)
                assert kronecker(lam, mu, [n] if n else []) == (1 if lam == mu else 0)
                assert kronecker(lam, mu, [1] * n) == (1 if lam == transpose(mu) else 0)


# 8 ---------------------------------------------------------------------------

def test_c08_cauchy_identities():
    for n in range(1, 5):
        for m in range(1, 5):
            for k in range(0, 7):
                sym = sum(dim_gl(lam, n) * dim_gl(lam, m) for lam in partitions(k))
                ext = sum(dim_gl(lam, n) * dim_gl(transpose(lam), m) for lam in partitions(k))
                assert sym == binomial(n * m + k - 1, k), (n, m, k)
                assert ext == binomial(n * m, k), (n, m, k)


# 9 ---------------------------------------------------------------------------

@_timed(120.0)
def test_c09_plethysm_closed_forms():
    for n in range(1, 7):
        got = compose(simple([n]), simple([2]), 2 * n)
        assert got.truncation_degree is None
        assert got.terms == {Partition(2 * x for x in lam): 1 for lam in partitions(n)}
    for n in range(0, 5):
        v = matchings(n)
        assert sum(c * dim_sym(lam) for lam, c in v.items()) == factorial(2 * n) // (2**n * factorial(n))
    for n in range(1, 9):
        for m in range(1, 8 // n + 1):
            classes = wreath_class_sums(n, m)
            for lam in partitions(n):
                for mu in partitions(m):
                    agg, order = induced_plethysm(lam, mu, classes, mn_character)
                    expected = {}
                    for nu in partitions(n * m):
                        num = sum(v * mn_character(nu, ct) for ct, v in agg.items())
                        assert num % order == 0
                        if num:
                            expected[nu] = num // order
                    assert compose(simple(lam), simple(mu), n * m).terms == expected, (lam, mu)


# 10 --------------------------------------------------------------------------

def test_c10_schur_calculus_laws():
    rng = random.Random(SEED + 10)
    for _ in range(25):
        v, w = _random_object(rng), _random_object(rng)
        lhs = schur_derivative(tensor(v, w))
        rhs = tensor(schur_derivative(v), w) + tensor(v, schur_derivative(w))
        assert lhs.same_terms(rhs)
        for k in range(1, 4):
            for nu in partitions(k):
                lhs = higher_derivative(nu, tensor(v, w))
                rhs = VObject()
                for a in range(k + 1):
                    for lam in partitions(a):
                        for mu in partitions(k - a):
                            c = lr_coefficient(nu, lam, mu)
                            if c:
                                rhs = rhs + c * tensor(higher_derivative(lam, v), higher_derivative(mu, w))
                assert lhs.same_terms(rhs), (nu, v, w)
        iterated = v
        for k in range(1, 4):
            iterated = schur_derivative(iterated)
            rhs = VObject()
            for lam in partitions(k):
                rhs = rhs + dim_sym(lam) * higher_derivative(lam, v)
            assert iterated.same_terms(rhs)
        for lam in partitions(rng.randint(1, 3)):
            for mu in partitions(rng.randint(1, 3)):
                assert higher_derivative(lam, higher_derivative(mu, v)).same_terms(
                    higher_derivative(mu, higher_derivative(lam, v))
                )
    # chain rule on simples
    for a in range(1, 4):
        for b in range(1, 4):
            for wl in partitions(a):
                for vl in partitions(b):
                    W, V = simple(wl), simple(vl)
                    lhs = schur_derivative(compose(W, V, 9))
                    rhs = tensor(compose(schur_derivative(W), V, 9), schur_derivative(V))
                    assert lhs.same_terms(rhs), (wl, vl)


# 11 --------------------------------------------------------------------------

@_timed(30.0)
def test_c11_koszul_exactness():
    for n in range(1, 4):
        report = exactness_report(koszul_complex(n, 6))
        assert report.homology == {(0, 0): 1}, (n, report.homology)
        assert report.summary() == "H_i = 0 for i ≥ 1; H_0 = 1·(degree 0)"
    c = koszul_complex(1, 6)
    for D in range(1, 7):
        mat = c.differentials[(1, D)]
        assert len(mat) == 1 and len(mat[0]) == 1 and mat[0][0] != 0
    shapes = [(len(m), len(m[0])) for m in (koszul_generator_matrix(3, i) for i in (3, 2, 1))]
    assert shapes == [(3, 1), (3, 3), (1, 3)]
    # every column of the middle map has two entries, each +-(one variable)
    middle = koszul_generator_matrix(3, 2)
    for j in range(3):
        entries = [row[j] for row in middle if row[j]]
        assert len(entries) == 2
        assert all(len(e) == 1 and abs(next(iter(e.values()))) == 1 for e in entries)
    rank1 = koszul_generator_matrix(1, 1)
    assert rank1 == [[{1: -1}]] or rank1 == [[{1: 1}]]


# 12 --------------------------------------------------------------------------

def test_c12_efw_validity():
    rng = random.Random(SEED + 12)
    for _ in range(200):
        n_rows = rng.randint(1, 5)
        alpha = sorted((rng.randint(0, 4) for _ in range(rng.randint(0, n_rows))), reverse=True)
        alpha = Partition([x for x in alpha if x])
        beta = Partition([alpha.at(0) + rng.randint(1, 4)] + list(alpha[1:]))
        p = efw_plan(alpha, beta, n_rows)
        report = validate_plan(p)
        assert report.ok, report.failures()
        back = plan_from_degree_sequence(p.d)
        assert back.d == p.d
        if alpha.at(n_rows - 1) == 0:
            assert back == p
    p = efw_plan([1], [3], 2)
    assert p.d.degrees == (0, 2, 4)
    assert [list(s) for s in p.shapes] == [[1], [3], [3, 2]]
    assert plan_betti_table(p, 2) == [(0, 2), (2, 4), (4, 2)]


# 13 --------------------------------------------------------------------------

def test_c13_hilbert_series():
    sym = tca_decompose(PolynomialTcaSpec.sym_regular(1), 10)
    assert hilbert_series(sym, 10) == [Fraction(1, factorial(n)) for n in range(11)]
    rng = random.Random(SEED + 13)
    for _ in range(50):
        v, w = _random_object(rng, max_size=3), _random_object(rng, max_size=3)
        lhs = enhanced_hilbert(tensor(v, w), 6)
        rhs = enhanced_product(enhanced_hilbert(v, 6), enhanced_hilbert(w, 6), 6)
        assert lhs == rhs, (v, w)
    for n in range(0, 7):
        assert enhanced_hilbert(regular(n), n) == {Partition([1] * n): 1}


# 14 --------------------------------------------------------------------------

def test_c14_boundedness():
    rng = random.Random(SEED + 14)
    for _ in range(100):
        v, w = _random_object(rng, max_size=5), _random_object(rng, max_size=5)
        assert ell(tensor(v, w)) == ell(v) + ell(w), (v, w)
    for u in range(0, 4):
        spec = PolynomialTcaSpec.sym_u1(u)
        ells = [ell(tca_decompose(spec, D)) for D in range(0, 9)]
        assert ells == [min(D, u) for D in range(0, 9)], (u, ells)
        assert ell(tca_decompose(spec, 8, generic=True)) == u


CRITERIA = [
    test_c01_lr_golden_value,
    test_c02_dimension_goldens,
    test_c03_pieri_goldens,
    test_c04_schur_weyl_dimension_audit,
    test_c05_lr_property_sweep,
    test_c06_character_suite,
    test_c07_kronecker_suite,
    test_c08_cauchy_identities,
    test_c09_plethysm_closed_forms,
    test_c10_schur_calculus_laws,
    test_c11_koszul_exactness,
    test_c12_efw_validity,
    test_c13_hilbert_series,
    test_c14_boundedness,
]


def main() -> int:
    failed = 0
    for fn in CRITERIA:
        clear_caches()
        t0 = time.perf_counter()
        try:
            fn()
            verdict = "PASS"
        except Exception as exc:  # report and keep going
            verdict = f"FAIL ({type(exc).__name__}: {str(exc)[:200]})"
            failed += 1
        print(f"{verdict[:4]}  {fn.__name__}  {time.perf_counter() - t0:.2f}s  {verdict[5:]}".rstrip())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
