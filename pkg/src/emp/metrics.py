"""Distances between diagrams and between summary matrices.

Matching distances use the L-inf ground cost with diagonal augmentation: each
point may match a point of the other diagram or its own projection onto the
diagonal.  p < inf is solved exactly by linear assignment on the augmented
cost matrix; p = inf (bottleneck) by binary search over candidate costs with
bipartite feasibility checks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import ConfigError
from .filtration import ThresholdGrid
from .persistence import PersistenceDiagram
from .summaries import (
    EmpSummary,
    emp_summary,
    filter_values,
    positive_length_shift,
    slice_diagrams,
)


def _points(pd) -> np.ndarray:
    if isinstance(pd, PersistenceDiagram):
        pts = pd.points
    else:
        pts = np.asarray(pd, dtype=float).reshape(-1, 2)
    if pts.size and not np.all(np.isfinite(pts)):
        raise ConfigError("diagrams must be finite (cap essential bars first)")
    return pts


def _augmented_costs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(M+N) x (N+M) cost matrix: cross block, diagonal projections, and a
    zero dummy-vs-dummy block."""
    m, n = len(a), len(b)
    diag_a = (a[:, 1] - a[:, 0]) / 2.0 if m else np.zeros(0)
    diag_b = (b[:, 1] - b[:, 0]) / 2.0 if n else np.zeros(0)
    cost = np.zeros((m + n, n + m))
    if m and n:
        cost[:m, :n] = np.abs(a[:, None, :] - b[None, :, :]).max(axis=2)
    cost[:m, n:] = diag_a[:, None]
    cost[m:, :n] = diag_b[None, :]
    return cost


def wasserstein(pd_a, pd_b, p=2.0) -> float:
    """Matching distance between two diagrams; ``p`` in [1, inf]."""
    if not math.isinf(p) and p < 1:
        raise ConfigError("wasserstein order must be >= 1")
    a, b = _points(pd_a), _points(pd_b)
    if len(a) == 0 and len(b) == 0:
        return 0.0
    cost = _augmented_costs(a, b)
    if math.isinf(p):
        return _bottleneck(cost)
    rows, cols = linear_sum_assignment(cost**p)
    return float((cost[rows, cols] ** p).sum() ** (1.0 / p))


def _bottleneck(cost: np.ndarray) -> float:
    """Smallest c such that a perfect matching exists using entries <= c."""
    candidates = np.unique(cost)
    lo, hi = 0, candidates.size - 1
    if _feasible(cost, candidates[lo]):
        return float(candidates[lo])
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _feasible(cost, candidates[mid]):
            hi = mid
        else:
            lo = mid
    return float(candidates[hi])


def _feasible(cost: np.ndarray, c: float) -> bool:
    allowed = csr_matrix(cost <= c)
    match = maximum_bipartite_matching(allowed, perm_type="column")
    return bool((match != -1).all())


def induced_matching_distance(pds_a, pds_b, p=2.0) -> float:
    """Sum of slice-wise matching distances over two equal-length diagram lists."""
    if len(pds_a) != len(pds_b):
        raise ConfigError("diagram lists must have equal length (same first grid)")
    return float(sum(wasserstein(x, y, p) for x, y in zip(pds_a, pds_b)))


def per_slice_wasserstein(pds_a, pds_b, p=2.0) -> np.ndarray:
    if len(pds_a) != len(pds_b):
        raise ConfigError("diagram lists must have equal length (same first grid)")
    return np.array([wasserstein(x, y, p) for x, y in zip(pds_a, pds_b)])


def _row_metric(metric):
    if callable(metric):
        return metric
    if metric in ("linf", "sup"):
        return lambda x, y: float(np.abs(x - y).max()) if x.size else 0.0
    if metric == "l2":
        return lambda x, y: float(np.linalg.norm(x - y))
    raise ConfigError(f"unknown slice metric {metric!r}")


def emp_distance(m_a: EmpSummary, m_b: EmpSummary, slice_metric="linf") -> float:
    """Sum over first-direction slices of a row-wise distance between two
    summaries of identical configuration."""
    if m_a.data.shape != m_b.data.shape:
        raise ConfigError("summaries have different shapes")
    if m_a.method != m_b.method or m_a.homology_dim != m_b.homology_dim:
        raise ConfigError("summaries have different methods or dimensions")
    d = _row_metric(slice_metric)
    rows_a = m_a.data.reshape(m_a.data.shape[0], -1)
    rows_b = m_b.data.reshape(m_b.data.shape[0], -1)
    return float(sum(d(x, y) for x, y in zip(rows_a, rows_b)))


@dataclass(frozen=True)
class DistanceReport:
    """Distances for one graph pair: per-slice matching costs, their sum, the
    summary-matrix distance, and their ratio (None when the sum is zero)."""

    pair_id: int
    per_slice: np.ndarray
    induced: float
    emp: float
    ratio: float | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "pair_id": self.pair_id,
                "per_slice": [float(x) for x in self.per_slice],
                "induced": self.induced,
                "emp": self.emp,
                "ratio": self.ratio,
            },
            sort_keys=True,
        )


def stability_check(
    graph_pairs,
    f_spec,
    g_spec,
    grid: ThresholdGrid,
    method: str = "landscape",
    homology_dim: int = 0,
    p=math.inf,
    *,
    second_direction: str | None = None,
    method_params: dict | None = None,
    slice_metric="linf",
    length_shift: float | None = None,
) -> list[DistanceReport]:
    """Compare, for each graph pair, the summary-matrix distance against the
    induced matching distance computed from the same shared grid.

    For landscapes with sup-norm rows and p = inf the first never exceeds the
    second; for other methods the ratio column estimates the constant.
    """
    reports = []
    for k, (ga, gb) in enumerate(graph_pairs):
        shift = length_shift
        if shift is None and second_direction == "power":
            # both graphs must share one length transform
            pooled = np.concatenate([filter_values(ga, g_spec)[0], filter_values(gb, g_spec)[0]])
            shift = positive_length_shift(pooled)
        common = dict(second_direction=second_direction, length_shift=shift)
        pds_a = slice_diagrams(ga, f_spec, g_spec, grid, homology_dim, **common)
        pds_b = slice_diagrams(gb, f_spec, g_spec, grid, homology_dim, **common)
        per_slice = per_slice_wasserstein(pds_a, pds_b, p)
        induced = float(per_slice.sum())
        ma = emp_summary(
            ga, f_spec, g_spec, grid, method, homology_dim,
            method_params=method_params, **common,
        )
        mb = emp_summary(
            gb, f_spec, g_spec, grid, method, homology_dim,
            method_params=method_params, **common,
        )
        emp = emp_distance(ma, mb, slice_metric)
        ratio = emp / induced if induced > 0 else None
        reports.append(DistanceReport(k, per_slice, induced, emp, ratio))
    return reports


def write_stability_report(reports, path) -> None:
    """One JSON object per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")
