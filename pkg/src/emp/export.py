"""Dataset-level feature computation and CSV/JSON export.

Each graph becomes one CSV row: ``label, n_nodes, n_edges`` followed by the
flattened summary matrix for every requested homology dimension (dim-0 block
first).  A JSON sidecar records everything needed to recompute the rows:
filters, grids, direction, conventions, and library versions.  Rerunning the
same configuration produces byte-identical files.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field

import joblib
import numpy as np

from . import __version__
from .datasets import GraphDataset
from .errors import ConfigError
from .filtration import ThresholdGrid, full_slice, pad_thresholds, select_thresholds, slice_distances
from .summaries import (
    CONVENTIONS,
    FilterSpec,
    emp_summary,
    emp_summary_3d,
    filter_values,
    positive_length_shift,
)
from .vectorize import DEFAULT_IMAGE_RESOLUTION, METHODS, vector_length

ORDERS = ("fg", "gf")
THRESHOLD_SCOPES = ("dataset", "graph")


@dataclass(frozen=True)
class ExportConfig:
    """Everything that pins a feature export.

    ``h`` switches on the three-direction form (``f`` and ``g`` slice, ``h``
    runs the final filtration); ``second_direction`` always describes the
    last direction (``g`` normally, ``h`` when given).
    """

    f: str | FilterSpec = "degree"
    g: str | FilterSpec = "degree"
    h: str | FilterSpec | None = None
    second_direction: str | None = None
    method: str = "betti"
    homology_dims: tuple[int, ...] = (0, 1)
    grid_shape: tuple[int, ...] = (50, 50)
    strategy: str = "quantile"
    order: str = "fg"
    threshold_scope: str = "dataset"
    method_params: dict = field(default_factory=dict)
    n_jobs: int = 1

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}")
        if self.order not in ORDERS:
            raise ConfigError(f"order must be one of {ORDERS}")
        if self.threshold_scope not in THRESHOLD_SCOPES:
            raise ConfigError(f"threshold scope must be one of {THRESHOLD_SCOPES}")
        dims = tuple(self.homology_dims)
        if not dims or any(d not in (0, 1) for d in dims) or len(set(dims)) != len(dims):
            raise ConfigError("homology_dims must be (0,), (1,), or (0, 1)")
        object.__setattr__(self, "homology_dims", dims)
        shape = tuple(int(s) for s in self.grid_shape)
        if self.h is not None and len(shape) == 2:
            shape = shape + (shape[1],)
        if len(shape) != (3 if self.h is not None else 2) or any(s < 1 for s in shape):
            raise ConfigError("grid shape must be MxN (or MxNxK with a third filter)")
        object.__setattr__(self, "grid_shape", shape)
        if self.h is not None and self.threshold_scope != "dataset":
            raise ConfigError("three-direction exports support dataset-scope thresholds only")
        object.__setattr__(self, "f", FilterSpec.parse(self.f) if isinstance(self.f, str) else self.f)
        object.__setattr__(self, "g", FilterSpec.parse(self.g) if isinstance(self.g, str) else self.g)
        if isinstance(self.h, str):
            object.__setattr__(self, "h", FilterSpec.parse(self.h))

    def ordered_specs(self) -> tuple[FilterSpec, FilterSpec]:
        """(first, second) after applying the order tag."""
        return (self.f, self.g) if self.order == "fg" else (self.g, self.f)


def _power_distance_pool(graphs, per_graph_values, shift):
    """Finite pairwise shortest-path distances pooled across graphs."""
    pool = []
    for g, vals in zip(graphs, per_graph_values):
        d = slice_distances(full_slice(g), vals + shift)
        iu = np.triu_indices(d.shape[0], k=1)
        pool.append(d[iu][np.isfinite(d[iu])])
    return np.concatenate(pool) if pool else np.zeros(0)


def _pooled_grid(dataset: GraphDataset, config: ExportConfig):
    """Dataset-global grid plus the shared power-length shift (or None)."""
    first, second = config.ordered_specs()
    m, n = config.grid_shape[:2]
    first_pool = np.concatenate([filter_values(g, first)[0] for g in dataset.graphs])
    second_vals = [filter_values(g, second)[0] for g in dataset.graphs]
    second_pool = np.concatenate(second_vals)
    shift = None
    if config.h is None and config.second_direction == "power":
        shift = positive_length_shift(second_pool)
        second_pool = _power_distance_pool(dataset.graphs, second_vals, shift)
    alphas, a_deg = select_thresholds(first_pool, m, config.strategy)
    betas, b_deg = select_thresholds(second_pool, n, config.strategy)
    # pad deduplicated sequences back to the configured counts so the shape
    # law (width fixed by the config, not the data) holds dataset-wide
    alphas = pad_thresholds(alphas, m)
    betas = pad_thresholds(betas, n)
    grid = ThresholdGrid(alphas, betas, config.strategy, a_deg, b_deg)
    if config.h is None:
        return grid, shift, None
    third_vals = [filter_values(g, config.h)[0] for g in dataset.graphs]
    third_pool = np.concatenate(third_vals)
    if config.second_direction == "power":
        shift = positive_length_shift(third_pool)
        third_pool = _power_distance_pool(dataset.graphs, third_vals, shift)
    gammas, _ = select_thresholds(third_pool, config.grid_shape[2], config.strategy)
    gammas = pad_thresholds(gammas, config.grid_shape[2])
    return grid, shift, gammas


def _graph_grid(graph, config: ExportConfig):
    """Per-graph grid padded to the configured shape, plus the per-graph shift."""
    first, second = config.ordered_specs()
    m, n = config.grid_shape
    first_vals, _ = filter_values(graph, first)
    second_vals, _ = filter_values(graph, second)
    shift = None
    if config.second_direction == "power":
        shift = positive_length_shift(second_vals)
        d = slice_distances(full_slice(graph), second_vals + shift)
        iu = np.triu_indices(d.shape[0], k=1)
        second_vals = d[iu][np.isfinite(d[iu])]
    alphas, a_deg = select_thresholds(first_vals, m, config.strategy)
    betas, b_deg = select_thresholds(second_vals, n, config.strategy)
    alphas = pad_thresholds(alphas, m)
    betas = pad_thresholds(betas, n)
    return ThresholdGrid(alphas, betas, config.strategy, a_deg, b_deg), shift


def _graph_row(graph, config: ExportConfig, grid, shift, gammas):
    first, second = config.ordered_specs()
    if grid is None:
        grid, shift = _graph_grid(graph, config)
    label = 0 if graph.label is None else graph.label
    blocks = [np.array([label, graph.node_count, graph.edge_count], dtype=float)]
    for dim in config.homology_dims:
        if config.h is not None:
            summary = emp_summary_3d(
                graph,
                first,
                second,
                config.h,
                (grid.alphas, grid.betas, gammas),
                config.method,
                dim,
                third_direction=config.second_direction,
                method_params=config.method_params,
                length_shift=shift,
            )
        else:
            summary = emp_summary(
                graph,
                first,
                second,
                grid,
                config.method,
                dim,
                second_direction=config.second_direction,
                method_params=config.method_params,
                length_shift=shift,
                order_tag=config.order,
            )
        blocks.append(summary.data.ravel())
    return np.concatenate(blocks)


def compute_features(dataset: GraphDataset, config: ExportConfig):
    """Feature matrix (one row per graph), header names, and sidecar metadata."""
    if len(dataset) == 0:
        return np.zeros((0, 3)), ["label", "n_nodes", "n_edges"], _sidecar(dataset, config, None, None, None, {})
    grid = shift = gammas = None
    if config.threshold_scope == "dataset":
        grid, shift, gammas = _pooled_grid(dataset, config)
        m, n = grid.alphas.size, grid.betas.size
    else:
        m, n = config.grid_shape[:2]
    resolution = config.method_params.get("resolution", DEFAULT_IMAGE_RESOLUTION)
    if config.h is not None:
        width = m * n * vector_length(config.method, gammas.size, resolution)
    else:
        width = m * vector_length(config.method, n, resolution)
    header = ["label", "n_nodes", "n_edges"]
    for dim in config.homology_dims:
        header += [f"h{dim}_{i:05d}" for i in range(width)]

    if config.n_jobs == 1:
        rows = [_graph_row(g, config, grid, shift, gammas) for g in dataset.graphs]
    else:
        rows = joblib.Parallel(n_jobs=config.n_jobs)(
            joblib.delayed(_graph_row)(g, config, grid, shift, gammas) for g in dataset.graphs
        )
    matrix = np.vstack(rows)
    if matrix.shape[1] != len(header):
        raise ConfigError("computed width disagrees with the configured grid shape")
    widths = {str(dim): width for dim in config.homology_dims}
    meta = _sidecar(dataset, config, grid, shift, gammas, widths)
    return matrix, header, meta


def _spec_dict(spec):
    if spec is None:
        return None
    return {"kind": spec.kind, "scope": spec.scope, "attribute_index": spec.attribute_index}


def _sidecar(dataset, config, grid, shift, gammas, widths) -> dict:
    import networkx
    import scipy

    return {
        "dataset": dataset.stats(),
        "config": {
            "f": _spec_dict(config.f),
            "g": _spec_dict(config.g),
            "h": _spec_dict(config.h),
            "second_direction": config.second_direction,
            "method": config.method,
            "method_params": {
                k: list(v) if isinstance(v, tuple) else v for k, v in config.method_params.items()
            },
            "homology_dims": list(config.homology_dims),
            "grid_shape": list(config.grid_shape),
            "strategy": config.strategy,
            "order": config.order,
            "threshold_scope": config.threshold_scope,
        },
        "grid": None
        if grid is None
        else {
            "alphas": grid.alphas.tolist(),
            "betas": grid.betas.tolist(),
            "gammas": None if gammas is None else np.asarray(gammas).tolist(),
            "degenerate": [bool(grid.alpha_degenerate), bool(grid.beta_degenerate)],
        },
        "length_shift": shift,
        "feature_widths": widths,
        "conventions": CONVENTIONS,
        "versions": {
            "emp": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "networkx": networkx.__version__,
        },
    }


def export_features(dataset: GraphDataset, config: ExportConfig, out_prefix) -> tuple[str, str]:
    """Write ``<prefix>.csv`` and ``<prefix>.json``; returns both paths."""
    matrix, header, meta = compute_features(dataset, config)
    csv_path = os.fspath(out_prefix) + ".csv"
    json_path = os.fspath(out_prefix) + ".json"
    lines = [",".join(header)]
    for row in matrix:
        head = f"{int(row[0])},{int(row[1])},{int(row[2])}"
        rest = ",".join(f"{x:.17g}" for x in row[3:])
        lines.append(head + "," + rest if rest else head)
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return csv_path, json_path


def read_features(csv_path):
    """Read an exported CSV (and its sidecar when present).

    Returns a dict with ``labels``, ``n_nodes``, ``n_edges``, ``features``,
    ``header``, and ``meta`` (None when the sidecar is absent).
    """
    csv_path = os.fspath(csv_path)
    with open(csv_path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        body = [ln for ln in fh.read().splitlines() if ln.strip()]
    if body:
        data = np.loadtxt(io.StringIO("\n".join(body)), delimiter=",", ndmin=2)
    else:
        data = np.zeros((0, len(header)))
    if data.shape[1] != len(header):
        raise ConfigError("feature CSV width disagrees with its header")
    meta = None
    sidecar = os.path.splitext(csv_path)[0] + ".json"
    if os.path.exists(sidecar):
        with open(sidecar, encoding="utf-8") as fh:
            meta = json.load(fh)
    return {
        "labels": data[:, 0].astype(np.int64),
        "n_nodes": data[:, 1].astype(np.int64),
        "n_edges": data[:, 2].astype(np.int64),
        "features": data[:, 3:],
        "header": header,
        "meta": meta,
    }
