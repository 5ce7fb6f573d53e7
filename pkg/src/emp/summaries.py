"""Multiparameter summary matrices.

A summary stacks, for each threshold of a first filter, the vectorized
persistence diagram obtained by running a second filtration inside that
slice.  The result is an m x k matrix (or an m x n x k array when a third
direction is used) whose shape depends only on the configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexes import clique_complex, edge_graded_complex
from .errors import ConfigError, FilterError
from .filtration import (
    ThresholdGrid,
    power_filtration,
    restrict_slice,
    sublevel_slices,
    edge_weight_slices,
)
from .graphs import (
    EDGE_FILTER_KINDS,
    Graph,
    NODE_FILTER_KINDS,
    compute_edge_filter,
    compute_node_filter,
)
from .persistence import compute_persistence
from .vectorize import vector_length, vectorize

SECOND_DIRECTIONS = ("sublevel", "edge-weight", "power")

# Conventions that pin otherwise ambiguous numbers; stored with every export
# so results stay auditable.
CONVENTIONS = {
    "alive": "birth <= t < death; essential bars closed at the cap",
    "betweenness": "unnormalized shortest-path pair counts",
    "cap": "last second-direction threshold",
    "closeness": "(reachable-1)/sum(distances); unreachable excluded; isolated nodes 0",
    "edge_direction_vertex_grade": "all vertices at the first threshold",
    "grade_snap": "smallest threshold >= value; values past the last threshold excluded",
    "image_axes": "(birth, lifespan) plane, row-major flattening",
    "power_inequality": "strict: simplex enters when all pairwise distances < epsilon",
    "power_lengths": "edge lengths shifted by a recorded offset when nonpositive",
    "power_scope": "distances measured inside each slice",
    "zero_bars": "zero-persistence pairs dropped",
}


@dataclass(frozen=True)
class FilterSpec:
    """A filter choice: kind name, optional node/edge scope (needed only for
    ambiguous kinds such as ``attribute``), and attribute column."""

    kind: str
    scope: str | None = None
    attribute_index: int = 0

    def resolved_scope(self) -> str:
        if self.scope is not None:
            if self.scope not in ("node", "edge"):
                raise ConfigError(f"filter scope must be node or edge, got {self.scope!r}")
            return self.scope
        is_node = self.kind in NODE_FILTER_KINDS
        is_edge = self.kind in EDGE_FILTER_KINDS
        if is_node and is_edge:
            raise ConfigError(f"filter kind {self.kind!r} needs an explicit scope")
        if is_node:
            return "node"
        if is_edge:
            return "edge"
        raise FilterError(f"unknown filter kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FilterSpec":
        """Accept ``kind``, ``node_attribute``/``edge_attribute``, or ``kind:index``."""
        kind = text.strip()
        index = 0
        if ":" in kind:
            kind, _, idx = kind.partition(":")
            try:
                index = int(idx)
            except ValueError as exc:
                raise ConfigError(f"bad attribute index in filter spec {text!r}") from exc
        for prefix, scope in (("node_", "node"), ("edge_", "edge")):
            stripped = kind.removeprefix(prefix)
            if stripped != kind and stripped in ("attribute",):
                return cls(stripped, scope, index)
        return cls(kind, None, index)


def filter_values(graph: Graph, spec) -> tuple[np.ndarray, str]:
    """Evaluate a filter on the whole graph; returns (values, scope)."""
    if isinstance(spec, str):
        spec = FilterSpec.parse(spec)
    scope = spec.resolved_scope()
    if scope == "node":
        vals = compute_node_filter(graph, spec.kind, spec.attribute_index).values
    else:
        vals = compute_edge_filter(graph, spec.kind, spec.attribute_index).values
    return vals, scope


def positive_length_shift(values) -> float:
    """Offset making edge lengths usable as distances: 0 when already positive,
    else 1 - min (so the smallest length becomes 1)."""
    values = np.asarray(values, dtype=float)
    if values.size == 0 or values.min() > 0:
        return 0.0
    return 1.0 - float(values.min())


@dataclass(frozen=True)
class EmpSummary:
    """Stacked vectorization with full provenance."""

    data: np.ndarray
    homology_dim: int
    method: str
    params: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    @property
    def shape(self):
        return self.data.shape


def _first_slices(graph, spec, values, scope, alphas):
    if scope == "node":
        return sublevel_slices(graph, values, alphas)
    return edge_weight_slices(graph, values, alphas)


def _slice_complex(s, direction, values, betas, shift):
    if direction == "sublevel":
        return clique_complex(s, values, betas)
    if direction == "edge-weight":
        return edge_graded_complex(s, values, betas)
    if direction == "power":
        return power_filtration(s, betas, edge_lengths=values + shift)
    raise ConfigError(f"unknown second direction {direction!r}")


def _resolve_direction(direction, scope):
    if direction is None:
        return "sublevel" if scope == "node" else "edge-weight"
    if direction not in SECOND_DIRECTIONS:
        raise ConfigError(f"unknown second direction {direction!r}")
    needed = "node" if direction == "sublevel" else "edge"
    if scope != needed:
        raise ConfigError(f"direction {direction!r} needs a {needed} filter")
    return direction


def slice_diagrams(
    graph: Graph,
    f_spec,
    g_spec,
    grid: ThresholdGrid,
    homology_dim: int = 0,
    *,
    second_direction: str | None = None,
    length_shift: float | None = None,
):
    """Per-slice persistence diagrams: one for each first-direction threshold."""
    if homology_dim not in (0, 1):
        raise ConfigError("homology_dim must be 0 or 1")
    f_spec = FilterSpec.parse(f_spec) if isinstance(f_spec, str) else f_spec
    g_spec = FilterSpec.parse(g_spec) if isinstance(g_spec, str) else g_spec
    f_vals, f_scope = filter_values(graph, f_spec)
    g_vals, g_scope = filter_values(graph, g_spec)
    direction = _resolve_direction(second_direction, g_scope)
    shift = 0.0
    if direction == "power":
        shift = positive_length_shift(g_vals) if length_shift is None else float(length_shift)
    sliced = _first_slices(graph, f_spec, f_vals, f_scope, grid.alphas)
    betas = grid.betas
    out = []
    for s in sliced:
        fc = _slice_complex(s, direction, g_vals, betas, shift)
        out.append(compute_persistence(fc, cap=float(betas[-1]))[homology_dim])
    return out


def emp_summary(
    graph: Graph,
    f_spec,
    g_spec,
    grid: ThresholdGrid,
    method: str = "landscape",
    homology_dim: int = 0,
    *,
    second_direction: str | None = None,
    method_params: dict | None = None,
    length_shift: float | None = None,
    order_tag: str = "fg",
) -> EmpSummary:
    """The m x k summary: row i vectorizes the diagram of the second
    filtration restricted to the i-th slice of the first."""
    method_params = dict(method_params or {})
    f_spec = FilterSpec.parse(f_spec) if isinstance(f_spec, str) else f_spec
    g_spec = FilterSpec.parse(g_spec) if isinstance(g_spec, str) else g_spec
    f_vals, f_scope = filter_values(graph, f_spec)
    g_vals, g_scope = filter_values(graph, g_spec)
    direction = _resolve_direction(second_direction, g_scope)
    shift = 0.0
    if direction == "power":
        shift = positive_length_shift(g_vals) if length_shift is None else float(length_shift)

    diagrams = slice_diagrams(
        graph,
        f_spec,
        g_spec,
        grid,
        homology_dim,
        second_direction=direction,
        length_shift=shift,
    )
    betas = grid.betas
    width = vector_length(method, betas.size, method_params.get("resolution", (50, 50)))
    rows = np.zeros((len(diagrams), width))
    for i, pd in enumerate(diagrams):
        rows[i] = vectorize(pd, method, betas, **method_params).vector
    provenance = {
        "first": {"kind": f_spec.kind, "scope": f_scope, "thresholds": grid.alphas.tolist()},
        "second": {
            "kind": g_spec.kind,
            "direction": direction,
            "thresholds": betas.tolist(),
            "length_shift": shift if direction == "power" else None,
        },
        "order": order_tag,
        "cap": float(betas[-1]),
        "homology_dim": homology_dim,
        "method": method,
        "method_params": {k: list(v) if isinstance(v, tuple) else v for k, v in method_params.items()},
        "threshold_strategy": grid.strategy,
        "degenerate": [bool(grid.alpha_degenerate), bool(grid.beta_degenerate)],
        "conventions": CONVENTIONS,
    }
    return EmpSummary(rows, homology_dim, method, method_params, provenance)


def emp_betti(graph: Graph, f_spec, g_spec, grid: ThresholdGrid, homology_dim: int = 0, **kw) -> EmpSummary:
    """Bigraded Betti matrix: entry (i, j) is the Betti number of cell (i, j)."""
    return emp_summary(graph, f_spec, g_spec, grid, "betti", homology_dim, **kw)


def emp_summary_3d(
    graph: Graph,
    f_spec,
    g_spec,
    h_spec,
    grids,
    method: str = "landscape",
    homology_dim: int = 0,
    *,
    third_direction: str | None = None,
    method_params: dict | None = None,
    length_shift: float | None = None,
) -> EmpSummary:
    """The m x n x k array: floor (i, j) vectorizes the third filtration inside
    the (i, j) cell of the first two directions (both sublevel/edge-weight)."""
    if homology_dim not in (0, 1):
        raise ConfigError("homology_dim must be 0 or 1")
    method_params = dict(method_params or {})
    alphas, betas, gammas = (np.asarray(g, dtype=float) for g in grids)
    f_spec = FilterSpec.parse(f_spec) if isinstance(f_spec, str) else f_spec
    g_spec = FilterSpec.parse(g_spec) if isinstance(g_spec, str) else g_spec
    h_spec = FilterSpec.parse(h_spec) if isinstance(h_spec, str) else h_spec
    f_vals, f_scope = filter_values(graph, f_spec)
    g_vals, g_scope = filter_values(graph, g_spec)
    h_vals, h_scope = filter_values(graph, h_spec)
    direction = _resolve_direction(third_direction, h_scope)
    shift = 0.0
    if direction == "power":
        shift = positive_length_shift(h_vals) if length_shift is None else float(length_shift)

    sliced = _first_slices(graph, f_spec, f_vals, f_scope, alphas)
    width = vector_length(method, gammas.size, method_params.get("resolution", (50, 50)))
    data = np.zeros((alphas.size, betas.size, width))
    for i, s in enumerate(sliced):
        for j, b in enumerate(betas):
            if g_scope == "node":
                cell = restrict_slice(s, node_keep=g_vals <= b)
            else:
                cell = restrict_slice(s, edge_keep=g_vals <= b)
            fc = _slice_complex(cell, direction, h_vals, gammas, shift)
            pd = compute_persistence(fc, cap=float(gammas[-1]))[homology_dim]
            data[i, j] = vectorize(pd, method, gammas, **method_params).vector
    provenance = {
        "first": {"kind": f_spec.kind, "scope": f_scope, "thresholds": alphas.tolist()},
        "second": {"kind": g_spec.kind, "scope": g_scope, "thresholds": betas.tolist()},
        "third": {
            "kind": h_spec.kind,
            "direction": direction,
            "thresholds": gammas.tolist(),
            "length_shift": shift if direction == "power" else None,
        },
        "cap": float(gammas[-1]),
        "homology_dim": homology_dim,
        "method": method,
        "method_params": {k: list(v) if isinstance(v, tuple) else v for k, v in method_params.items()},
        "conventions": CONVENTIONS,
    }
    return EmpSummary(data, homology_dim, method, method_params, provenance)
