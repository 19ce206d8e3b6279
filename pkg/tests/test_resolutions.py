import json
import random
from math import comb

import pytest

from schurkit.characters import dim_gl
from schurkit.errors import IntegrityError, ValidationError
from schurkit.lr import lr_coefficient
from schurkit.partitions import Partition
from schurkit.resolutions import (
    DegreeSequence,
    GradedComplex,
    betti_csv,
    betti_text,
    efw_plan,
    exactness_report,
    koszul_complex,
    koszul_generator_matrix,
    plan_betti_table,
    plan_from_degree_sequence,
    validate_plan,
)
from schurkit.tca import koszul_generators
from schurkit.vcat import evaluate_at_rank


def _random_plan(rng):
    n_rows = rng.randint(1, 5)
    alpha = sorted((rng.randint(0, 4) for _ in range(rng.randint(0, n_rows))), reverse=True)
    alpha = Partition([x for x in alpha if x])
    beta = [alpha.at(0) + rng.randint(1, 4)] + list(alpha[1:])
    return efw_plan(alpha, beta, n_rows)


class TestDegreeSequence:
    def test_normalizes(self):
        assert DegreeSequence((3, 5, 9)).degrees == (0, 2, 6)

    def test_strict(self):
        with pytest.raises(ValidationError):
            DegreeSequence((0, 2, 2))
        with pytest.raises(ValidationError):
            DegreeSequence(())


class TestEfwPlan:
    def test_worked_example(self):
        p = efw_plan([1], [3], 2)
        assert p.e == (2, 2)
        assert p.d.degrees == (0, 2, 4)
        assert p.shapes == (Partition([1]), Partition([3]), Partition([3, 2]))

    def test_koszul_plan(self):
        for n in range(1, 6):
            p = efw_plan([], [1], n)
            assert p.e == (1,) * n
            assert p.d.degrees == tuple(range(n + 1))
            assert p.shapes == tuple(Partition([1] * i) for i in range(n + 1))
            assert validate_plan(p).ok
            assert plan_betti_table(p, n) == [(i, comb(n, i)) for i in range(n + 1)]

    @pytest.mark.parametrize(
        "alpha, beta, n_rows, needle",
        [
            ([2, 1], [3, 1], 1, "exceeds n_rows"),
            ([2], [2], 2, "beta_1 > alpha_1"),
            ([2, 1], [3, 2], 2, "beta_i = alpha_i"),
            ([1], [2], 0, "n_rows"),
        ],
    )
    def test_malformed(self, alpha, beta, n_rows, needle):
        with pytest.raises(ValidationError, match=needle):
            efw_plan(alpha, beta, n_rows)

    def test_random_plans(self):
        rng = random.Random(9)
        for _ in range(200):
            p = _random_plan(rng)
            assert all(b > a for a, b in zip(p.d.degrees, p.d.degrees[1:]))
            assert validate_plan(p).ok
            for i, s in enumerate(p.shapes):
                assert s.size == p.alpha.size + p.d[i]


class TestRoundTrip:
    def test_examples(self):
        p = plan_from_degree_sequence([0, 2, 4])
        assert (p.alpha, p.beta) == (Partition([1]), Partition([3]))
        for n in range(1, 6):
            k = plan_from_degree_sequence(range(n + 1))
            assert (k.alpha, k.beta) == (Partition(), Partition([1]))

    def test_rejects_non_strict(self):
        with pytest.raises(ValidationError):
            plan_from_degree_sequence([0, 1, 1])
        with pytest.raises(ValidationError):
            plan_from_degree_sequence([0])

    def test_plan_roundtrip(self):
        rng = random.Random(10)
        checked = 0
        while checked < 100:
            p = _random_plan(rng)
            assert plan_from_degree_sequence(p.d).d == p.d
            if p.alpha.at(p.n_rows - 1) == 0:
                assert plan_from_degree_sequence(p.d) == p
                checked += 1

    def test_degree_roundtrip(self):
        rng = random.Random(12)
        for _ in range(100):
            gaps = [rng.randint(1, 4) for _ in range(rng.randint(1, 5))]
            d = [0]
            for g in gaps:
                d.append(d[-1] + g)
            assert plan_from_degree_sequence(d).d.degrees == tuple(d)


class TestValidate:
    def test_two_step_obstruction_example(self):
        assert lr_coefficient([3, 2], [1], [4]) == 0
        report = validate_plan(efw_plan([1], [3], 2))
        step2 = [c for c in report.checks if c["step"] == 2 and c["condition"] == "no_map_two_steps_down"]
        assert step2 == [{"step": 2, "condition": "no_map_two_steps_down", "ok": True, "value": 0}]

    def test_report_flags_broken_plan(self):
        from dataclasses import replace

        p = efw_plan([1], [3], 2)
        # [1,1,1]/[1] is a vertical strip, so the first step cannot be a Pieri map
        broken = replace(p, shapes=(Partition([1]), Partition([1, 1, 1]), Partition([3, 2])))
        report = validate_plan(broken)
        assert not report.ok
        bad = {(c["step"], c["condition"]) for c in report.checks if not c["ok"]}
        assert bad == {(1, "horizontal_strip"), (1, "pieri_multiplicity_one"), (2, "horizontal_strip"), (2, "pieri_multiplicity_one")}


class TestBetti:
    def test_worked_example(self):
        p = efw_plan([1], [3], 2)
        assert plan_betti_table(p, 2) == [(0, 2), (2, 4), (4, 2)]
        assert plan_betti_table(p, 0) == [(0, 0), (2, 0), (4, 0)]
        assert plan_betti_table(efw_plan([], [2], 1), 0) == [(0, 1), (2, 0)]

    def test_zero_exactly_when_too_many_rows(self):
        rng = random.Random(13)
        for _ in range(50):
            p = _random_plan(rng)
            for rank in range(0, 6):
                for (d, b), s in zip(plan_betti_table(p, rank), p.shapes):
                    assert (b == 0) == (len(s) > rank)
                    assert b == dim_gl(s, rank)

    def test_formats(self):
        table = [(0, 2), (2, 4), (4, 2)]
        assert betti_csv(table) == "i,0,2,4\n0,2,0,0\n1,0,4,0\n2,0,0,2\n"
        assert betti_text(table).splitlines()[0].split() == ["i", "0", "2", "4"]


class TestKoszul:
    def test_rank1(self):
        c = koszul_complex(1, 5)
        for D in range(1, 6):
            assert c.dims[D] == [1, 1]
            assert c.differentials[(1, D)] == [[-1]]
        assert c.dims[0] == [1]

    def test_rank2_degree2(self):
        c = koszul_complex(2, 2)
        assert c.dims[2] == [3, 4, 1]
        report = exactness_report(c)
        assert (report.ranks[(1, 2)], report.ranks[(2, 2)]) == (3, 1)
        assert (1, 2) not in report.homology and (2, 2) not in report.homology
        assert (0, 2) not in report.homology

    def test_shapes_and_signs_rank3(self):
        assert [(len(m), len(m[0])) for m in (koszul_generator_matrix(3, i) for i in (3, 2, 1))] == [(3, 1), (3, 3), (1, 3)]
        assert koszul_generator_matrix(3, 1) == [[{1: -1}, {2: -1}, {3: -1}]]
        with pytest.raises(ValidationError):
            koszul_generator_matrix(3, 4)

    def test_exact(self):
        for n in range(1, 4):
            report = exactness_report(koszul_complex(n, 6))
            assert report.is_resolution_of_residue_field()
            assert report.summary() == "H_i = 0 for i ≥ 1; H_0 = 1·(degree 0)"
        report = exactness_report(koszul_complex(4, 4, jobs=3))
        assert report.is_resolution_of_residue_field()

    def test_parallel_matches_serial(self):
        assert koszul_complex(3, 5, jobs=4) == koszul_complex(3, 5)

    def test_euler_characteristic(self):
        for n in range(1, 5):
            c = koszul_complex(n, 6)
            for D, dims in c.dims.items():
                chi = sum((-1) ** i * x for i, x in enumerate(dims))
                assert chi == (1 if D == 0 else 0)

    def test_generator_dims_match_tca(self):
        for n in range(1, 5):
            c = koszul_complex(n, n)
            gens = koszul_generators(n + 1)
            # the generators of F_i sit in internal degree i
            assert [c.dims[i][i] for i in range(n + 1)] == [evaluate_at_rank(g, n) for g in gens]

    def test_json(self):
        data = json.loads(exactness_report(koszul_complex(2, 3)).to_json())
        assert data["homology"] == [{"index": 0, "degree": 0, "dimension": 1}]
        assert data["summary"].startswith("H_i = 0")

    def test_bad_arguments(self):
        with pytest.raises(ValidationError):
            koszul_complex(0, 3)
        with pytest.raises(ValidationError):
            koszul_complex(2, -1)


class TestNegativeControls:
    def test_zeroed_differential_shows_homology(self):
        c = koszul_complex(2, 3)
        diffs = dict(c.differentials)
        diffs[(2, 3)] = [[0] * len(row) for row in diffs[(2, 3)]]
        broken = GradedComplex(c.rank, c.max_degree, c.dims, diffs)
        report = exactness_report(broken)
        assert report.homology[(2, 3)] == 2
        assert report.homology[(1, 3)] == 2
        assert not report.is_resolution_of_residue_field()
        assert report.summary().startswith("H_1 = 2·(degree 3)")

    def test_perturbed_entry_breaks_d_squared(self):
        c = koszul_complex(2, 3)
        diffs = {k: [row[:] for row in v] for k, v in c.differentials.items()}
        diffs[(2, 3)][0][0] += 1
        with pytest.raises(IntegrityError):
            exactness_report(GradedComplex(c.rank, c.max_degree, c.dims, diffs))

    def test_zero_complex(self):
        empty = GradedComplex(1, 0, {0: [0]}, {})
        report = exactness_report(empty)
        assert report.homology == {}
        assert report.summary() == "H_i = 0 for i ≥ 1; H_0 = 0"
