import numpy as np
import pytest

from emp import (
    ConfigError,
    PersistenceDiagram,
    betti_curve,
    entropy_curve,
    landscape,
    persistence_image,
    sample_grid,
    silhouette,
    vector_length,
    vectorize,
)

from _oracles import gaussian_cell_integral, kth_max_tents, silhouette_value
from conftest import random_diagram


def _pd(bars, cap):
    return PersistenceDiagram.from_bars(0, [(b, d, False) for b, d in bars], cap=cap)


class TestSampleGrid:
    def test_interleaves_midpoints(self):
        assert sample_grid([0.0, 1.0, 3.0]).tolist() == [0.0, 0.5, 1.0, 2.0, 3.0]

    def test_single_threshold(self):
        assert sample_grid([2.0]).tolist() == [2.0]


class TestLandscape:
    def test_single_bar(self):
        vals = landscape(_pd([(0.0, 1.0)], 1.0), [0.0, 0.5, 1.0]).values
        assert vals.tolist() == [0.0, 0.25, 0.5, 0.25, 0.0]

    def test_order_two_needs_two_bars(self):
        vals = landscape(_pd([(0.0, 1.0)], 1.0), [0.0, 1.0], order=2).values
        assert vals.tolist() == [0.0, 0.0, 0.0]

    def test_matches_kth_max_oracle(self, rng):
        for _ in range(20):
            pd = random_diagram(rng)
            grid = [0.0, 0.3, 0.7, 1.0]
            for order in (1, 2, 3):
                got = landscape(pd, grid, order=order).values
                pts = list(zip(pd.births, pd.deaths))
                want = [kth_max_tents(pts, x, order) for x in sample_grid(grid)]
                np.testing.assert_allclose(got, want, atol=1e-12)

    def test_rejects_bad_order(self):
        with pytest.raises(ConfigError):
            landscape(_pd([], 1.0), [0.0, 1.0], order=0)


class TestSilhouette:
    def test_single_bar_equals_landscape(self):
        pd = _pd([(0.0, 1.0)], 1.0)
        grid = [0.0, 0.5, 1.0]
        np.testing.assert_allclose(silhouette(pd, grid).values, landscape(pd, grid).values)

    def test_empty_diagram_is_zero(self):
        assert silhouette(_pd([], 1.0), [0.0, 1.0]).values.tolist() == [0.0, 0.0, 0.0]

    def test_matches_oracle(self, rng):
        for _ in range(20):
            pd = random_diagram(rng)
            grid = [0.0, 0.4, 1.0]
            for power in (0.5, 1.0, 2.0):
                got = silhouette(pd, grid, power=power).values
                pts = list(zip(pd.births, pd.deaths))
                want = [silhouette_value(pts, x, power) for x in sample_grid(grid)]
                np.testing.assert_allclose(got, want, atol=1e-12)


class TestBettiCurve:
    def test_counts_alive_bars(self):
        pd = PersistenceDiagram.from_bars(
            0, [(0.0, 2.0, False), (1.0, 3.0, True)], cap=3.0
        )
        assert betti_curve(pd, [0.0, 1.0, 2.0, 3.0]).values.tolist() == [1.0, 2.0, 1.0, 1.0]

    def test_equals_betti_at(self, rng):
        for _ in range(10):
            pd = random_diagram(rng)
            grid = np.linspace(0.0, 1.0, 7)
            got = betti_curve(pd, grid).values
            want = [pd.betti_at(t) for t in grid]
            assert got.tolist() == want


class TestEntropyCurve:
    def test_single_bar_zero_entropy(self):
        # one bar carries all the mass: -1 * log 1 = 0
        vals = entropy_curve(_pd([(0.0, 1.0)], 1.0), [0.0, 0.5]).values
        np.testing.assert_allclose(vals, [0.0, 0.0])

    def test_two_equal_bars(self):
        pd = _pd([(0.0, 1.0), (0.0, 1.0)], 1.0)
        vals = entropy_curve(pd, [0.5]).values
        np.testing.assert_allclose(vals, [np.log(2.0)], atol=1e-12)

    def test_dead_bars_stop_contributing(self):
        pd = _pd([(0.0, 1.0), (0.0, 2.0)], 2.0)
        vals = entropy_curve(pd, [0.5, 1.5]).values
        third, two_thirds = 1.0 / 3.0, 2.0 / 3.0
        full = -third * np.log(third) - two_thirds * np.log(two_thirds)
        np.testing.assert_allclose(vals, [full, -two_thirds * np.log(two_thirds)], atol=1e-12)

    def test_empty_diagram(self):
        assert entropy_curve(_pd([], 1.0), [0.0, 1.0]).values.tolist() == [0.0, 0.0]


class TestPersistenceImage:
    def test_empty_diagram_zero_image(self):
        vec = persistence_image(_pd([], 1.0), [0.0, 1.0], resolution=(4, 5))
        assert vec.values.shape == (4, 5)
        assert not vec.values.any()

    def test_cells_match_quadrature(self):
        pd = _pd([(0.2, 0.7)], 1.0)
        res = (3, 3)
        vec = persistence_image(pd, [0.0, 0.5, 1.0], resolution=res, bandwidth=0.25)
        xs = np.linspace(0.0, 1.0, res[0] + 1)
        ys = np.linspace(0.0, 1.0, res[1] + 1)
        for r in range(res[0]):
            for s in range(res[1]):
                want = gaussian_cell_integral(
                    (0.2, 0.5), 0.5, 0.25, xs[r], xs[r + 1], ys[s], ys[s + 1]
                )
                np.testing.assert_allclose(vec.values[r, s], want, atol=1e-10)

    def test_total_mass_with_wide_domain(self):
        # every boundary is >= 4 sigma from the point, so the cell sum nearly
        # captures the whole weighted Gaussian
        pd = _pd([(0.0, 0.5)], 1.0)
        vec = persistence_image(pd, [-2.0, 2.0], resolution=(40, 40), bandwidth=0.125)
        assert abs(vec.values.sum() - 0.5) < 1e-4

    def test_weight_power(self):
        pd = _pd([(0.0, 0.5)], 1.0)
        a = persistence_image(pd, [-2.0, 2.0], resolution=(8, 8), bandwidth=0.5, weight_power=2.0)
        b = persistence_image(pd, [-2.0, 2.0], resolution=(8, 8), bandwidth=0.5, weight_power=1.0)
        np.testing.assert_allclose(a.values, 0.5 * b.values, atol=1e-12)

    def test_rejects_degenerate_domain(self):
        with pytest.raises(ConfigError):
            persistence_image(_pd([], 1.0), [1.0])
        with pytest.raises(ConfigError):
            persistence_image(_pd([], 1.0), [0.0, 1.0], bandwidth=0.0)


class TestDispatch:
    def test_vector_lengths(self):
        grid = [0.0, 0.5, 1.0]
        pd = _pd([(0.0, 1.0)], 1.0)
        for method in ("betti", "landscape", "silhouette", "entropy"):
            vec = vectorize(pd, method, grid)
            assert vec.vector.size == vector_length(method, len(grid))
        vec = vectorize(pd, "image", grid, resolution=(6, 7))
        assert vec.vector.size == vector_length("image", len(grid), resolution=(6, 7))

    def test_unknown_method(self):
        with pytest.raises(ConfigError):
            vectorize(_pd([], 1.0), "heat", [0.0, 1.0])

    def test_all_methods_finite(self, rng):
        grid = [0.0, 0.25, 0.75, 1.0]
        for _ in range(10):
            pd = random_diagram(rng)
            for method in ("betti", "landscape", "silhouette", "entropy"):
                assert np.all(np.isfinite(vectorize(pd, method, grid).vector))
            assert np.all(
                np.isfinite(vectorize(pd, "image", grid, resolution=(5, 5)).vector)
            )

    def test_image_row_major_flatten(self):
        pd = _pd([(0.0, 0.9)], 1.0)
        vec = vectorize(pd, "image", [0.0, 1.0], resolution=(2, 3))
        np.testing.assert_array_equal(vec.vector, vec.values.reshape(-1))
