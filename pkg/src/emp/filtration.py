"""Threshold grids, sublevel/edge-weight slicing, and distance-based filtrations.

The first filtering direction turns a graph into a nested sequence of
subgraphs (one "slice" per threshold).  Slices reference the parent graph by
node/edge index so the second filtering direction can grade them without
copying.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .complexes import FilteredComplex
from .errors import ConfigError
from .graphs import Graph

THRESHOLD_STRATEGIES = ("quantile", "uniform", "exact_values")


def select_thresholds(values, count: int, strategy: str = "quantile"):
    """Pick a strictly increasing threshold sequence covering the observed range.

    Returns ``(thresholds, degenerate)``.  ``quantile`` places thresholds at
    empirical quantiles of the values and deduplicates ties, ``uniform`` spaces
    them evenly over [min, max], ``exact_values`` uses the sorted unique values
    (evenly subsampled by index if there are more than ``count``).  When every
    value is identical the result is the degenerate pair [v, v+1] with the
    flag set.
    """
    values = np.asarray(values, dtype=float).ravel()
    if values.size == 0:
        raise ConfigError("cannot select thresholds from an empty value set")
    if count < 2:
        raise ConfigError("threshold count must be >= 2")
    if strategy not in THRESHOLD_STRATEGIES:
        raise ConfigError(f"unknown threshold strategy {strategy!r}")
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:
        return np.array([lo, lo + 1.0]), True
    if strategy == "uniform":
        out = np.linspace(lo, hi, count)
    else:
        srt = np.sort(values)
        if strategy == "exact_values":
            uniq = np.unique(srt)
            if uniq.size <= count:
                out = uniq
            else:
                idx = np.round(np.linspace(0, uniq.size - 1, count)).astype(int)
                out = uniq[idx]
        else:  # quantile
            idx = np.round(np.linspace(0.0, 1.0, count) * (srt.size - 1)).astype(int)
            out = np.unique(srt[idx])
    return np.asarray(out, dtype=float), False


def pad_thresholds(seq, count: int) -> np.ndarray:
    """Extend a deduplicated threshold sequence to exactly ``count`` entries by
    appending evenly spaced values past the maximum (they admit no new
    simplices, so padded grids keep vector widths fixed)."""
    seq = np.asarray(seq, dtype=float)
    if seq.size >= count:
        return seq
    if seq.size > 1 and seq[-1] > seq[0]:
        step = (seq[-1] - seq[0]) / (count - 1)
    else:
        step = 1.0
    extra = seq[-1] + step * np.arange(1, count - seq.size + 1)
    return np.concatenate([seq, extra])


@dataclass(frozen=True)
class ThresholdGrid:
    """Threshold sequences for the two filtering directions."""

    alphas: np.ndarray
    betas: np.ndarray
    strategy: str = "quantile"
    alpha_degenerate: bool = False
    beta_degenerate: bool = False

    def __post_init__(self):
        for name in ("alphas", "betas"):
            seq = np.asarray(getattr(self, name), dtype=float)
            if seq.ndim != 1 or seq.size == 0:
                raise ConfigError(f"{name} must be a non-empty 1d sequence")
            if seq.size > 1 and not np.all(np.diff(seq) > 0):
                raise ConfigError(f"{name} must be strictly increasing")
            object.__setattr__(self, name, seq)

    @classmethod
    def from_values(cls, f_values, g_values, shape=(50, 50), strategy="quantile"):
        alphas, a_deg = select_thresholds(f_values, shape[0], strategy)
        betas, b_deg = select_thresholds(g_values, shape[1], strategy)
        return cls(alphas, betas, strategy, a_deg, b_deg)


@dataclass(frozen=True)
class GraphSlice:
    """A subgraph of ``parent`` given by sorted node ids and parent edge indices."""

    parent: Graph
    node_ids: np.ndarray
    edge_ids: np.ndarray

    @property
    def node_count(self) -> int:
        return len(self.node_ids)

    @property
    def edge_count(self) -> int:
        return len(self.edge_ids)

    def edge_list(self):
        return [self.parent.edges[i] for i in self.edge_ids]

    def is_subslice_of(self, other: "GraphSlice") -> bool:
        return set(self.node_ids) <= set(other.node_ids) and set(self.edge_ids) <= set(
            other.edge_ids
        )


@dataclass(frozen=True)
class SlicedFiltration:
    """Nested slices of one graph, one per threshold of the first direction."""

    parent: Graph
    alphas: np.ndarray
    slices: tuple[GraphSlice, ...]

    def __len__(self):
        return len(self.slices)

    def __iter__(self):
        return iter(self.slices)


def sublevel_slices(graph: Graph, f_values, alphas) -> SlicedFiltration:
    """Slice by node values: slice i keeps nodes with f <= alphas[i] and induced edges."""
    f = np.asarray(f_values, dtype=float)
    if f.shape != (graph.node_count,):
        raise ConfigError("node filter values must have one entry per node")
    alphas = np.asarray(alphas, dtype=float)
    slices = []
    for a in alphas:
        keep = f <= a
        node_ids = np.flatnonzero(keep)
        edge_ids = np.array(
            [i for i, (u, v) in enumerate(graph.edges) if keep[u] and keep[v]],
            dtype=np.int64,
        )
        slices.append(GraphSlice(graph, node_ids, edge_ids))
    return SlicedFiltration(graph, alphas, tuple(slices))


def edge_weight_slices(graph: Graph, w_values, alphas) -> SlicedFiltration:
    """Slice by edge values: every node is present from the start, edges enter at w <= alpha."""
    w = np.asarray(w_values, dtype=float)
    if w.shape != (graph.edge_count,):
        raise ConfigError("edge filter values must have one entry per edge")
    alphas = np.asarray(alphas, dtype=float)
    all_nodes = np.arange(graph.node_count)
    slices = []
    for a in alphas:
        edge_ids = np.flatnonzero(w <= a)
        slices.append(GraphSlice(graph, all_nodes, edge_ids))
    return SlicedFiltration(graph, alphas, tuple(slices))


def restrict_slice(s: GraphSlice, node_keep=None, edge_keep=None) -> GraphSlice:
    """Intersect a slice with a node mask (inducing edges) and/or an edge mask.

    Masks are indexed by parent node/edge id.
    """
    node_ids = s.node_ids
    edge_ids = s.edge_ids
    if node_keep is not None:
        node_ids = node_ids[node_keep[node_ids]]
        keep = np.zeros(s.parent.node_count, dtype=bool)
        keep[node_ids] = True
        edge_ids = np.array(
            [i for i in edge_ids if keep[s.parent.edges[i][0]] and keep[s.parent.edges[i][1]]],
            dtype=np.int64,
        )
    if edge_keep is not None:
        edge_ids = edge_ids[edge_keep[edge_ids]]
    return GraphSlice(s.parent, node_ids, edge_ids)


def full_slice(graph: Graph) -> GraphSlice:
    return GraphSlice(graph, np.arange(graph.node_count), np.arange(graph.edge_count))


def slice_distances(s: GraphSlice, edge_lengths=None) -> np.ndarray:
    """All-pairs shortest-path distances within a slice (inf for unreachable pairs).

    ``edge_lengths`` is indexed by parent edge id; when omitted, the parent's
    edge weights are used if present, otherwise hop counts.
    """
    n = s.node_count
    if n == 0:
        return np.zeros((0, 0))
    local = {v: i for i, v in enumerate(s.node_ids)}
    if edge_lengths is None and s.parent.edge_weights is not None:
        edge_lengths = s.parent.edge_weights
    rows, cols, data = [], [], []
    unweighted = edge_lengths is None
    for eid in s.edge_ids:
        u, v = s.parent.edges[eid]
        w = 1.0 if unweighted else float(edge_lengths[eid])
        if w <= 0:
            raise ConfigError("distance-based filtration needs positive edge lengths")
        rows += [local[u], local[v]]
        cols += [local[v], local[u]]
        data += [w, w]
    adj = csr_matrix((data, (rows, cols)), shape=(n, n))
    return shortest_path(adj, method="D", directed=False, unweighted=unweighted)


def power_filtration(graph, epsilons, edge_lengths=None) -> FilteredComplex:
    """Distance-graded flag complex of a graph (or slice) over thresholds ``epsilons``.

    All vertices enter at the first threshold.  A pair (or triple) of vertices
    spans an edge (triangle) at the smallest epsilon strictly greater than all
    of its pairwise shortest-path distances; pairs at distance >= the last
    threshold (or unreachable) never connect.
    """
    s = full_slice(graph) if isinstance(graph, Graph) else graph
    epsilons = np.asarray(epsilons, dtype=float)
    if epsilons.size == 0:
        raise ConfigError("power filtration needs at least one threshold")
    if epsilons.size > 1 and not np.all(np.diff(epsilons) > 0):
        raise ConfigError("power filtration thresholds must be strictly increasing")
    n = s.node_count
    if n == 0:
        return FilteredComplex((), (), (), thresholds=epsilons)
    dist = slice_distances(s, edge_lengths)
    eps_hi = epsilons[-1]
    vertices = tuple((int(v), float(epsilons[0])) for v in s.node_ids)

    # grade index per pair: first epsilon strictly above the distance
    grade_of: dict[tuple[int, int], float] = {}
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            d = dist[i, j]
            if np.isfinite(d) and d < eps_hi:
                g = float(epsilons[np.searchsorted(epsilons, d, side="right")])
                u, v = int(s.node_ids[i]), int(s.node_ids[j])
                edges.append((u, v, g))
                grade_of[(i, j)] = g
                adj[i].add(j)
                adj[j].add(i)
    triangles = []
    for (i, j), g_ij in grade_of.items():
        for k in sorted(adj[i] & adj[j]):
            if k > j:
                g = max(g_ij, grade_of[(i, k)], grade_of[(j, k)])
                triangles.append(
                    (int(s.node_ids[i]), int(s.node_ids[j]), int(s.node_ids[k]), g)
                )
    edges.sort(key=lambda e: (e[2], e[0], e[1]))
    triangles.sort(key=lambda t: (t[3], t[0], t[1], t[2]))
    return FilteredComplex(vertices, tuple(edges), tuple(triangles), thresholds=epsilons)
