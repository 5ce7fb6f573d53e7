"""Graph container and the node/edge descriptor functions that drive filtrations.

A :class:`Graph` is a plain undirected graph with optional edge weights and
node/edge attribute vectors.  Descriptor ("filter") functions map nodes or
edges to reals; sublevel sets of these values generate the filtrations built
in :mod:`emp.filtration`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .errors import FilterError

NODE_FILTER_KINDS = (
    "degree",
    "weighted_degree",
    "closeness",
    "betweenness",
    "katz",
    "attribute",
    "constant",
)
EDGE_FILTER_KINDS = ("weight", "edge_betweenness", "forman_ricci", "attribute")

KATZ_ALPHA_FRACTION = 0.9
KATZ_TOL = 1e-10
POWER_ITER_TOL = 1e-8
POWER_ITER_MAX = 1000


@dataclass(frozen=True)
class Graph:
    """Undirected graph with nodes 0..node_count-1 and edges stored as (u, v), u < v.

    Arrays are treated as immutable.  Use :meth:`from_edges` to build a graph
    from unnormalized edge input (it sorts endpoints, drops duplicates, and
    keeps per-edge data aligned).
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    edge_weights: np.ndarray | None = None
    node_attributes: np.ndarray | None = None
    edge_attributes: np.ndarray | None = None
    label: int | None = None

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be >= 0")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.node_count} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not stored with u < v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if self.edge_weights is not None:
            w = np.asarray(self.edge_weights, dtype=float)
            if w.shape != (len(self.edges),):
                raise ValueError("edge_weights length must match edge count")
            if not np.all(np.isfinite(w)):
                raise ValueError("edge weights must be finite")
            object.__setattr__(self, "edge_weights", w)
        if self.node_attributes is not None:
            a = np.atleast_2d(np.asarray(self.node_attributes, dtype=float))
            if a.shape[0] != self.node_count:
                raise ValueError("node_attributes must have one row per node")
            object.__setattr__(self, "node_attributes", a)
        if self.edge_attributes is not None:
            a = np.atleast_2d(np.asarray(self.edge_attributes, dtype=float))
            if a.shape[0] != len(self.edges):
                raise ValueError("edge_attributes must have one row per edge")
            object.__setattr__(self, "edge_attributes", a)

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[Sequence[int]],
        edge_weights: Sequence[float] | None = None,
        node_attributes=None,
        edge_attributes=None,
        label: int | None = None,
    ) -> "Graph":
        """Normalize raw edge input: orient u < v, drop self-loops and duplicates.

        Per-edge weights/attributes follow their edge; the first occurrence of a
        duplicate wins.
        """
        order: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            order.setdefault(key, i)
        keys = sorted(order)
        rows = [order[k] for k in keys]
        w = None
        if edge_weights is not None:
            w = np.asarray(edge_weights, dtype=float)[rows]
        ea = None
        if edge_attributes is not None:
            ea = np.atleast_2d(np.asarray(edge_attributes, dtype=float))[rows]
        return cls(
            node_count=node_count,
            edges=tuple(keys),
            edge_weights=w,
            node_attributes=node_attributes,
            edge_attributes=ea,
            label=label,
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.node_count, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.node_count, self.node_count))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.node_count))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class NodeFilterValues:
    """One finite real per node plus the descriptor kind that produced it."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if not np.all(np.isfinite(self.values)):
            raise ValueError("node filter values must be finite")


@dataclass(frozen=True)
class EdgeFilterValues:
    """One finite real per edge plus the descriptor kind that produced it."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if not np.all(np.isfinite(self.values)):
            raise ValueError("edge filter values must be finite")


def _closeness(graph: Graph) -> np.ndarray:
    # Unreachable pairs are excluded from the sum; isolated nodes get 0.
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    n = graph.node_count
    if n == 0:
        return np.zeros(0)
    rows = [u for u, v in graph.edges] + [v for u, v in graph.edges]
    cols = [v for u, v in graph.edges] + [u for u, v in graph.edges]
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    dist = shortest_path(adj, method="D", unweighted=True, directed=False)
    out = np.zeros(n)
    for i in range(n):
        finite = np.isfinite(dist[i])
        reachable = int(finite.sum()) - 1  # excludes i itself
        if reachable > 0:
            out[i] = reachable / dist[i][finite].sum()
    return out


def _spectral_radius(a: np.ndarray) -> float:
    n = a.shape[0]
    if n == 0 or not a.any():
        return 0.0
    x = np.ones(n) / np.sqrt(n)
    lam = 0.0
    for _ in range(POWER_ITER_MAX):
        # Iterate on A + I: bipartite spectra have a -lambda_max eigenvalue
        # that makes plain power iteration oscillate.
        y = a @ x + x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        x = y / norm
        lam_new = float(x @ (a @ x))
        if abs(lam_new - lam) < POWER_ITER_TOL:
            return max(lam_new, 0.0)
        lam = lam_new
    return max(lam, 0.0)


def _katz(graph: Graph) -> np.ndarray:
    """Katz centrality sum_{k>=1} (alpha A)^k 1 with alpha = 0.9 / lambda_max.

    Accumulated by the fixed-point iteration s <- alpha A (1 + s), which
    converges geometrically since alpha * lambda_max < 1.  Nodes with no walks
    (isolated) come out exactly 0.
    """
    n = graph.node_count
    if n == 0:
        return np.zeros(0)
    a = graph.adjacency_matrix()
    lam = _spectral_radius(a)
    if lam <= 0.0:
        return np.zeros(n)
    alpha = KATZ_ALPHA_FRACTION / lam
    ones = np.ones(n)
    s = np.zeros(n)
    for _ in range(100000):
        s_next = alpha * (a @ (ones + s))
        if np.max(np.abs(s_next - s)) < KATZ_TOL:
            return s_next
        s = s_next
    raise RuntimeError("katz iteration failed to converge")


def compute_node_filter(graph: Graph, kind: str, attribute_index: int = 0) -> NodeFilterValues:
    """Evaluate a node descriptor function on every node.

    Supported kinds: degree, weighted_degree, closeness, betweenness, katz,
    attribute (column ``attribute_index`` of the node attributes), constant.
    """
    n = graph.node_count
    if kind == "degree":
        values = graph.degrees().astype(float)
    elif kind == "weighted_degree":
        if graph.edge_weights is None:
            raise FilterError("weighted_degree requires edge weights")
        values = np.zeros(n)
        for (u, v), w in zip(graph.edges, graph.edge_weights):
            values[u] += w
            values[v] += w
    elif kind == "closeness":
        values = _closeness(graph)
    elif kind == "betweenness":
        bc = nx.betweenness_centrality(graph.to_networkx(), normalized=False)
        values = np.array([bc[i] for i in range(n)])
    elif kind == "katz":
        values = _katz(graph)
    elif kind == "attribute":
        if graph.node_attributes is None:
            raise FilterError("graph has no node attributes")
        if not 0 <= attribute_index < graph.node_attributes.shape[1]:
            raise FilterError(f"node attribute index {attribute_index} out of range")
        values = graph.node_attributes[:, attribute_index].astype(float)
    elif kind == "constant":
        values = np.zeros(n)
    else:
        raise FilterError(f"unknown node filter kind {kind!r}")
    return NodeFilterValues(values=values, kind=kind)


def compute_edge_filter(graph: Graph, kind: str, attribute_index: int = 0) -> EdgeFilterValues:
    """Evaluate an edge descriptor function on every edge.

    Supported kinds: weight, edge_betweenness (unnormalized, each unordered
    node pair counted once), forman_ricci (4 - deg(u) - deg(v)), attribute.
    """
    if kind == "weight":
        if graph.edge_weights is None:
            raise FilterError("weight filter requires edge weights")
        values = np.asarray(graph.edge_weights, dtype=float)
    elif kind == "edge_betweenness":
        eb = nx.edge_betweenness_centrality(graph.to_networkx(), normalized=False)
        values = np.array([eb.get((u, v), eb.get((v, u), 0.0)) for u, v in graph.edges])
    elif kind == "forman_ricci":
        deg = graph.degrees()
        values = np.array([4.0 - deg[u] - deg[v] for u, v in graph.edges])
    elif kind == "attribute":
        if graph.edge_attributes is None:
            raise FilterError("graph has no edge attributes")
        if not 0 <= attribute_index < graph.edge_attributes.shape[1]:
            raise FilterError(f"edge attribute index {attribute_index} out of range")
        values = graph.edge_attributes[:, attribute_index].astype(float)
    else:
        raise FilterError(f"unknown edge filter kind {kind!r}")
    return EdgeFilterValues(values=values, kind=kind)
