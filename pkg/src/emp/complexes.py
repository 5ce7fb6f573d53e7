"""Graded flag complexes of dimension <= 2.

A :class:`FilteredComplex` stores vertices, edges, and triangles together with
the grade (filtration value) at which each simplex appears.  Grades must be
monotone: a simplex never appears before its faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ComplexError, ConfigError
from .graphs import Graph


def snap_to_thresholds(values, thresholds) -> np.ndarray:
    """Round each value up to the smallest threshold >= value.

    Values beyond the last threshold get nan — the caller excludes those
    simplices (they never enter the graded complex).
    """
    thresholds = np.asarray(thresholds, dtype=float)
    values = np.asarray(values, dtype=float)
    idx = np.searchsorted(thresholds, values, side="left")
    over = idx >= thresholds.size
    out = thresholds[np.minimum(idx, thresholds.size - 1)]
    out[over] = np.nan
    return out


@dataclass(frozen=True)
class FilteredComplex:
    """Simplices with grades: (v, g), (u, v, g) with u < v, (u, v, w, g) with u < v < w."""

    vertices: tuple[tuple[int, float], ...]
    edges: tuple[tuple[int, int, float], ...]
    triangles: tuple[tuple[int, int, int, float], ...]
    thresholds: np.ndarray | None = field(default=None, compare=False)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.triangles)

    def max_grade(self) -> float:
        grades = [g for *_, g in self.vertices]
        grades += [g for *_, g in self.edges]
        grades += [g for *_, g in self.triangles]
        return max(grades) if grades else 0.0

    def validate(self) -> None:
        """Check face containment and grade monotonicity; raise ComplexError."""
        vgrade = {}
        for v, g in self.vertices:
            if v in vgrade:
                raise ComplexError(f"duplicate vertex {v}")
            vgrade[v] = g
        egrade = {}
        for u, v, g in self.edges:
            if not u < v:
                raise ComplexError(f"edge ({u}, {v}) not sorted")
            if (u, v) in egrade:
                raise ComplexError(f"duplicate edge ({u}, {v})")
            if u not in vgrade or v not in vgrade:
                raise ComplexError(f"edge ({u}, {v}) has a missing endpoint")
            if g < vgrade[u] or g < vgrade[v]:
                raise ComplexError(f"edge ({u}, {v}) appears before an endpoint")
            egrade[(u, v)] = g
        seen = set()
        for u, v, w, g in self.triangles:
            if not u < v < w:
                raise ComplexError(f"triangle ({u}, {v}, {w}) not sorted")
            if (u, v, w) in seen:
                raise ComplexError(f"duplicate triangle ({u}, {v}, {w})")
            seen.add((u, v, w))
            for e in ((u, v), (u, w), (v, w)):
                if e not in egrade:
                    raise ComplexError(f"triangle ({u}, {v}, {w}) has a missing edge {e}")
                if g < egrade[e]:
                    raise ComplexError(f"triangle ({u}, {v}, {w}) appears before edge {e}")


def _slice_parts(g):
    """Accept a Graph or a GraphSlice-like object; return (parent, node_ids, edge_ids)."""
    if isinstance(g, Graph):
        return g, np.arange(g.node_count), np.arange(g.edge_count)
    return g.parent, np.asarray(g.node_ids), np.asarray(g.edge_ids)


def _slice_triangles(parent, node_ids, edge_ids):
    """Triangles of the flag complex: triples whose three edges are all present."""
    adj: dict[int, set[int]] = {int(v): set() for v in node_ids}
    pairs = []
    for eid in edge_ids:
        u, v = parent.edges[eid]
        adj[u].add(v)
        adj[v].add(u)
        pairs.append((u, v))
    tris = []
    for u, v in pairs:
        for w in adj[u] & adj[v]:
            if w > v:
                tris.append((u, v, w))
    tris.sort()
    return tris


def clique_complex(graph, node_values, thresholds=None) -> FilteredComplex:
    """Flag complex graded by node values: each simplex enters at the max over
    its vertices, snapped up to ``thresholds`` when given.  Nodes with a value
    past the last threshold are excluded along with everything they touch."""
    parent, node_ids, edge_ids = _slice_parts(graph)
    values = np.asarray(node_values, dtype=float)
    if values.shape != (parent.node_count,):
        raise ConfigError("node grading values must have one entry per parent node")
    grades = snap_to_thresholds(values, thresholds) if thresholds is not None else values
    node_ids = node_ids[~np.isnan(grades[node_ids])]
    keep = np.zeros(parent.node_count, dtype=bool)
    keep[node_ids] = True
    edge_ids = np.array(
        [i for i in edge_ids if keep[parent.edges[i][0]] and keep[parent.edges[i][1]]],
        dtype=np.int64,
    )
    vertices = tuple((int(v), float(grades[v])) for v in node_ids)
    edges = []
    for eid in edge_ids:
        u, v = parent.edges[eid]
        edges.append((u, v, float(max(grades[u], grades[v]))))
    edges.sort(key=lambda e: (e[2], e[0], e[1]))
    triangles = [
        (u, v, w, float(max(grades[u], grades[v], grades[w])))
        for u, v, w in _slice_triangles(parent, node_ids, edge_ids)
    ]
    triangles.sort(key=lambda t: (t[3], t[0], t[1], t[2]))
    return FilteredComplex(vertices, tuple(edges), tuple(triangles), thresholds=_grid(thresholds))


def edge_graded_complex(graph, edge_values, thresholds=None) -> FilteredComplex:
    """Flag complex graded by edge values: all vertices enter at the first
    threshold (or the min edge value), an edge at its own (snapped) value, and
    a triangle at the max over its three edges.  Edges past the last threshold
    are excluded."""
    parent, node_ids, edge_ids = _slice_parts(graph)
    values = np.asarray(edge_values, dtype=float)
    if values.shape != (parent.edge_count,):
        raise ConfigError("edge grading values must have one entry per parent edge")
    grades = snap_to_thresholds(values, thresholds) if thresholds is not None else values
    edge_ids = edge_ids[~np.isnan(grades[edge_ids])] if len(edge_ids) else edge_ids
    if thresholds is not None:
        base = float(np.asarray(thresholds, dtype=float)[0])
    else:
        base = float(grades[edge_ids].min()) if len(edge_ids) else 0.0
    vertices = tuple((int(v), base) for v in node_ids)
    egrade = {}
    edges = []
    for eid in edge_ids:
        u, v = parent.edges[eid]
        g = float(grades[eid])
        egrade[(u, v)] = g
        edges.append((u, v, g))
    edges.sort(key=lambda e: (e[2], e[0], e[1]))
    triangles = []
    for u, v, w in _slice_triangles(parent, node_ids, edge_ids):
        g = max(egrade[(u, v)], egrade[(u, w)], egrade[(v, w)])
        triangles.append((u, v, w, float(g)))
    triangles.sort(key=lambda t: (t[3], t[0], t[1], t[2]))
    return FilteredComplex(vertices, tuple(edges), tuple(triangles), thresholds=_grid(thresholds))


def _grid(thresholds):
    return None if thresholds is None else np.asarray(thresholds, dtype=float)
