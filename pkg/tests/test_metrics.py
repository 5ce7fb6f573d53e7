import json
import math

import numpy as np
import pytest

from emp import (
    ConfigError,
    DistanceReport,
    PersistenceDiagram,
    ThresholdGrid,
    emp_distance,
    emp_summary,
    induced_matching_distance,
    landscape,
    per_slice_wasserstein,
    slice_diagrams,
    stability_check,
    wasserstein,
    write_stability_report,
)

from _oracles import exhaustive_wasserstein
from conftest import random_diagram, random_graph


def _pd(points):
    return PersistenceDiagram.from_bars(
        0, [(b, d, False) for b, d in points], cap=max((d for _, d in points), default=1.0)
    )


class TestWasserstein:
    def test_point_versus_empty(self):
        a = _pd([(0.0, 1.0)])
        b = _pd([])
        for p in (1.0, 2.0, math.inf):
            assert wasserstein(a, b, p) == 0.5  # cost of the diagonal projection

    def test_identical_diagrams_zero(self, rng):
        for _ in range(10):
            pd = random_diagram(rng)
            for p in (1.0, 2.0, math.inf):
                assert wasserstein(pd, pd, p) <= 1e-12

    def test_symmetry(self, rng):
        for _ in range(10):
            a, b = random_diagram(rng), random_diagram(rng)
            for p in (1.0, 2.0, math.inf):
                assert abs(wasserstein(a, b, p) - wasserstein(b, a, p)) < 1e-12

    def test_matches_exhaustive_enumeration(self, rng):
        for _ in range(25):
            a, b = random_diagram(rng, max_points=4), random_diagram(rng, max_points=4)
            for p in (1.0, 2.0, math.inf):
                got = wasserstein(a, b, p)
                want = exhaustive_wasserstein(a.points, b.points, p)
                assert abs(got - want) < 1e-9

    def test_triangle_inequality(self, rng):
        for _ in range(15):
            a, b, c = (random_diagram(rng, max_points=4) for _ in range(3))
            for p in (1.0, 2.0, math.inf):
                ab = wasserstein(a, b, p)
                bc = wasserstein(b, c, p)
                ac = wasserstein(a, c, p)
                assert ac <= ab + bc + 1e-9

    def test_rejects_small_order(self):
        with pytest.raises(ConfigError):
            wasserstein(_pd([]), _pd([]), 0.5)

    def test_rejects_infinite_points(self):
        pd = PersistenceDiagram.from_bars(0, [(0.0, math.inf, True)], cap=1.0)
        with pytest.raises(ConfigError):
            wasserstein(pd, _pd([]), 2.0)

    def test_landscape_sup_bounded_by_bottleneck(self, rng):
        # the core single-slice stability fact used by the summary bound
        grid = np.linspace(0.0, 5.0, 9)
        for _ in range(50):
            a, b = random_diagram(rng), random_diagram(rng)
            la = landscape(a, grid).values
            lb = landscape(b, grid).values
            sup = float(np.abs(la - lb).max())
            assert sup <= wasserstein(a, b, math.inf) + 1e-9


class TestDiagramListDistances:
    def test_induced_is_sum(self, rng):
        lists = [[random_diagram(rng) for _ in range(3)] for _ in range(2)]
        per = per_slice_wasserstein(lists[0], lists[1], 2.0)
        total = induced_matching_distance(lists[0], lists[1], 2.0)
        assert abs(total - per.sum()) < 1e-12

    def test_length_mismatch(self):
        with pytest.raises(ConfigError):
            induced_matching_distance([_pd([])], [], 2.0)
        with pytest.raises(ConfigError):
            per_slice_wasserstein([_pd([])], [], 2.0)


class TestEmpDistance:
    def _pair(self, rng):
        grid = ThresholdGrid(np.array([1.0, 2.0, 4.0]), np.array([0.0, 2.0, 4.0]))
        a = emp_summary(random_graph(rng, max_nodes=8), "degree", "degree", grid)
        b = emp_summary(random_graph(rng, max_nodes=8), "degree", "degree", grid)
        return a, b

    def test_identical_is_zero(self, rng):
        a, _ = self._pair(rng)
        assert emp_distance(a, a) == 0.0

    def test_row_sum_of_sup_norms(self, rng):
        a, b = self._pair(rng)
        want = sum(float(np.abs(x - y).max()) for x, y in zip(a.data, b.data))
        assert abs(emp_distance(a, b, "linf") - want) < 1e-12
        assert abs(emp_distance(a, b, "sup") - want) < 1e-12

    def test_l2_rows(self, rng):
        a, b = self._pair(rng)
        want = sum(float(np.linalg.norm(x - y)) for x, y in zip(a.data, b.data))
        assert abs(emp_distance(a, b, "l2") - want) < 1e-12

    def test_callable_metric(self, rng):
        a, b = self._pair(rng)
        got = emp_distance(a, b, lambda x, y: float(np.abs(x - y).sum()))
        want = float(np.abs(a.data - b.data).sum())
        assert abs(got - want) < 1e-12

    def test_shape_mismatch(self, rng):
        a, _ = self._pair(rng)
        grid = ThresholdGrid(np.array([1.0, 2.0]), np.array([0.0, 2.0, 4.0]))
        c = emp_summary(random_graph(rng, max_nodes=8), "degree", "degree", grid)
        with pytest.raises(ConfigError):
            emp_distance(a, c)

    def test_pseudometric_triples(self, rng):
        grid = ThresholdGrid(np.array([1.0, 2.0, 4.0]), np.array([0.0, 2.0, 4.0]))
        mats = [
            emp_summary(random_graph(rng, max_nodes=8), "degree", "degree", grid)
            for _ in range(3)
        ]
        for metric in ("linf", "l2"):
            ab = emp_distance(mats[0], mats[1], metric)
            bc = emp_distance(mats[1], mats[2], metric)
            ac = emp_distance(mats[0], mats[2], metric)
            assert ab >= 0 and bc >= 0 and ac >= 0
            assert ac <= ab + bc + 1e-9
            assert abs(ab - emp_distance(mats[1], mats[0], metric)) < 1e-12


class TestStability:
    def test_summary_distance_bounded_by_induced(self, rng):
        # landscape rows + sup metric + bottleneck per slice: bound with
        # constant one, checked across random pairs
        grid = ThresholdGrid(np.array([1.0, 2.0, 4.0]), np.array([0.0, 1.0, 2.0, 4.0]))
        pairs = [
            (random_graph(rng, max_nodes=9), random_graph(rng, max_nodes=9))
            for _ in range(20)
        ]
        reports = stability_check(pairs, "degree", "degree", grid)
        for r in reports:
            assert r.emp <= r.induced + 1e-9
            if r.ratio is not None:
                assert r.ratio <= 1.0 + 1e-9

    def test_identical_pair_has_no_ratio(self, rng):
        g = random_graph(rng, max_nodes=8)
        grid = ThresholdGrid(np.array([2.0]), np.array([0.0, 2.0]))
        (r,) = stability_check([(g, g)], "degree", "degree", grid)
        assert r.induced == 0.0
        assert r.emp == 0.0
        assert r.ratio is None

    def test_additive_decomposition(self, rng):
        ga, gb = random_graph(rng, max_nodes=9), random_graph(rng, max_nodes=9)
        grid = ThresholdGrid(np.array([1.0, 3.0]), np.array([0.0, 2.0, 4.0]))
        (r,) = stability_check([(ga, gb)], "degree", "degree", grid, p=2.0)
        pds_a = slice_diagrams(ga, "degree", "degree", grid)
        pds_b = slice_diagrams(gb, "degree", "degree", grid)
        want = per_slice_wasserstein(pds_a, pds_b, 2.0)
        np.testing.assert_allclose(r.per_slice, want, atol=1e-12)
        assert abs(r.induced - want.sum()) < 1e-12

    def test_jsonl_report(self, rng, tmp_path):
        grid = ThresholdGrid(np.array([1.0, 2.0]), np.array([0.0, 1.0, 2.0]))
        pairs = [(random_graph(rng, max_nodes=7), random_graph(rng, max_nodes=7))]
        reports = stability_check(pairs, "degree", "degree", grid)
        out = tmp_path / "report.jsonl"
        write_stability_report(reports, out)
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 1
        rec = json.loads(lines[0])
        assert set(rec) == {"pair_id", "per_slice", "induced", "emp", "ratio"}
        assert rec["pair_id"] == 0
        assert len(rec["per_slice"]) == 2


def test_distance_report_json_roundtrip():
    r = DistanceReport(3, np.array([0.5, 0.25]), 0.75, 0.5, 2 / 3)
    rec = json.loads(r.to_json())
    assert rec["pair_id"] == 3
    assert rec["per_slice"] == [0.5, 0.25]
    assert abs(rec["ratio"] - 2 / 3) < 1e-12
