"""Benchmark dataset loading (sparse adjacency text layout) and fixtures.

A dataset directory ``<dir>/<NAME>_*.txt`` holds one global node table split
across files: ``_A.txt`` (directed edge list, 1-based global ids, both
directions present for undirected graphs), ``_graph_indicator.txt`` (graph id
per node), ``_graph_labels.txt`` (label per graph), plus optional
``_node_labels/_node_attributes/_edge_labels/_edge_attributes``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .graphs import Graph


def _read_table(path, dtype=float):
    try:
        arr = np.loadtxt(path, delimiter=",", dtype=dtype, ndmin=2)
    except OSError as exc:
        raise DataError(f"missing dataset file: {path}") from exc
    except ValueError as exc:
        raise DataError(f"malformed dataset file {path}: {exc}") from exc
    return arr


def _optional_table(path, dtype=float):
    return _read_table(path, dtype) if os.path.exists(path) else None


@dataclass(frozen=True)
class GraphDataset:
    name: str
    graphs: tuple[Graph, ...]
    labels: np.ndarray
    node_attribute_dim: int = 0
    edge_attribute_dim: int = 0

    def __post_init__(self):
        labels = np.asarray(self.labels)
        if labels.shape != (len(self.graphs),):
            raise DataError("one label per graph required")
        object.__setattr__(self, "labels", labels.astype(np.int64))
        object.__setattr__(self, "graphs", tuple(self.graphs))

    def __len__(self) -> int:
        return len(self.graphs)

    def stats(self) -> dict:
        nodes = np.array([g.node_count for g in self.graphs], dtype=float)
        edges = np.array([g.edge_count for g in self.graphs], dtype=float)
        return {
            "name": self.name,
            "n_graphs": len(self.graphs),
            "n_classes": int(np.unique(self.labels).size),
            "avg_nodes": float(nodes.mean()) if len(self.graphs) else 0.0,
            "avg_edges": float(edges.mean()) if len(self.graphs) else 0.0,
        }


def load_tudataset(directory, name: str | None = None, weight_attribute: int | None = None) -> GraphDataset:
    """Load a dataset directory; graphs get per-graph 0-based node ids.

    ``weight_attribute`` optionally selects an edge-attribute column to use as
    edge weights (distance-matrix style datasets ship weights that way).
    """
    directory = os.fspath(directory)
    if name is None:
        name = os.path.basename(os.path.normpath(directory))
    pre = os.path.join(directory, name + "_")

    a = _read_table(pre + "A.txt", dtype=np.int64)
    if a.shape[1] != 2:
        raise DataError(f"{pre}A.txt must have two columns")
    indicator = _read_table(pre + "graph_indicator.txt", dtype=np.int64).ravel()
    raw_labels = _read_table(pre + "graph_labels.txt").ravel()
    if not np.all(raw_labels == np.round(raw_labels)):
        raise DataError("graph labels must be integers")
    labels = raw_labels.astype(np.int64)

    n_nodes = indicator.size
    n_graphs = labels.size
    if indicator.min(initial=1) < 1 or indicator.max(initial=n_graphs) > n_graphs:
        raise DataError("graph indicator ids out of range")
    if a.size and (a.min() < 1 or a.max() > n_nodes):
        raise DataError("edge list references nodes outside the indicator table")

    node_attrs = _optional_table(pre + "node_attributes.txt")
    node_labels = _optional_table(pre + "node_labels.txt")
    edge_attrs = _optional_table(pre + "edge_attributes.txt")
    edge_labels = _optional_table(pre + "edge_labels.txt")
    node_feat = _hstack(node_attrs, node_labels, n_nodes, "node")
    edge_feat = _hstack(edge_attrs, edge_labels, a.shape[0], "edge")

    # per-graph local ids in ascending global order
    local = np.zeros(n_nodes + 1, dtype=np.int64)
    counts = np.zeros(n_graphs + 1, dtype=np.int64)
    for gid in indicator:
        counts[gid] += 1
    next_id = np.zeros(n_graphs + 1, dtype=np.int64)
    for v in range(1, n_nodes + 1):
        gid = indicator[v - 1]
        local[v] = next_id[gid]
        next_id[gid] += 1

    # dedupe directed rows to undirected u<v per graph, keeping the first
    # occurrence's attributes
    per_graph_edges: list[dict] = [dict() for _ in range(n_graphs + 1)]
    for row in range(a.shape[0]):
        u, v = int(a[row, 0]), int(a[row, 1])
        if u == v:
            continue
        gu, gv = indicator[u - 1], indicator[v - 1]
        if gu != gv:
            raise DataError(f"edge ({u}, {v}) crosses graphs {gu} and {gv}")
        lu, lv = int(local[u]), int(local[v])
        key = (lu, lv) if lu < lv else (lv, lu)
        per_graph_edges[gu].setdefault(key, row)

    graphs = []
    node_cursor = 0
    for gid in range(1, n_graphs + 1):
        n = int(counts[gid])
        items = sorted(per_graph_edges[gid].items())
        edges = [e for e, _ in items]
        rows = [r for _, r in items]
        g_node_feat = None
        if node_feat is not None:
            g_node_feat = node_feat[node_cursor : node_cursor + n]
        g_edge_feat = edge_feat[rows] if edge_feat is not None and rows else (
            np.zeros((0, edge_feat.shape[1])) if edge_feat is not None else None
        )
        weights = None
        if weight_attribute is not None:
            if g_edge_feat is None or weight_attribute >= g_edge_feat.shape[1]:
                raise DataError("weight_attribute column not present in edge attributes")
            weights = g_edge_feat[:, weight_attribute]
        graphs.append(
            Graph(
                node_count=n,
                edges=tuple(edges),
                edge_weights=None if weights is None else tuple(float(w) for w in weights),
                node_attributes=g_node_feat,
                edge_attributes=g_edge_feat,
                label=int(labels[gid - 1]),
            )
        )
        node_cursor += n

    return GraphDataset(
        name=name,
        graphs=tuple(graphs),
        labels=labels,
        node_attribute_dim=0 if node_feat is None else node_feat.shape[1],
        edge_attribute_dim=0 if edge_feat is None else edge_feat.shape[1],
    )


def _hstack(attrs, labels, expect_rows, what):
    parts = [p for p in (attrs, labels) if p is not None]
    if not parts:
        return None
    for p in parts:
        if p.shape[0] != expect_rows:
            raise DataError(f"{what} attribute rows do not match the {what} count")
    return np.hstack(parts).astype(float)


def save_tudataset(dataset: GraphDataset, directory) -> None:
    """Write a dataset back out in the same text layout (fixture helper)."""
    directory = os.fspath(directory)
    os.makedirs(directory, exist_ok=True)
    pre = os.path.join(directory, dataset.name + "_")
    a_rows, indicator, node_attr_rows, edge_attr_rows = [], [], [], []
    offset = 0
    for gid, g in enumerate(dataset.graphs, start=1):
        indicator += [gid] * g.node_count
        for i, (u, v) in enumerate(g.edges):
            a_rows.append((offset + u + 1, offset + v + 1))
            a_rows.append((offset + v + 1, offset + u + 1))
            if g.edge_attributes is not None:
                edge_attr_rows += [g.edge_attributes[i]] * 2
        if g.node_attributes is not None:
            node_attr_rows += list(g.node_attributes)
        offset += g.node_count
    with open(pre + "A.txt", "w") as fh:
        fh.writelines(f"{u}, {v}\n" for u, v in a_rows)
    with open(pre + "graph_indicator.txt", "w") as fh:
        fh.writelines(f"{gid}\n" for gid in indicator)
    with open(pre + "graph_labels.txt", "w") as fh:
        fh.writelines(f"{int(lab)}\n" for lab in dataset.labels)
    if node_attr_rows:
        with open(pre + "node_attributes.txt", "w") as fh:
            fh.writelines(", ".join(f"{x:.17g}" for x in row) + "\n" for row in node_attr_rows)
    if edge_attr_rows:
        with open(pre + "edge_attributes.txt", "w") as fh:
            fh.writelines(", ".join(f"{x:.17g}" for x in row) + "\n" for row in edge_attr_rows)
