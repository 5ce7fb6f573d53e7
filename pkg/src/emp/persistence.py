"""Persistence diagrams of graded flag complexes over GF(2).

Two routes compute the same diagrams:

* :func:`compute_persistence` — union-find for degree 0 plus a column
  reduction of the triangle boundary only (edges that merge components are
  known negative, so their columns never need reducing).
* :func:`compute_persistence_reduction` — the classic full boundary-matrix
  reduction, kept as an independent cross-check.

Columns are Python ints used as GF(2) bit vectors; the pivot of a column is
its highest set bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import FilteredComplex


@dataclass(frozen=True)
class PersistenceDiagram:
    """Bars of one homological degree.

    Finite bars are half-open [birth, death); essential bars have their death
    written down as ``cap`` (the last grade of interest) and are closed there.
    """

    dim: int
    births: np.ndarray
    deaths: np.ndarray
    essential: np.ndarray
    cap: float

    def __post_init__(self):
        b = np.asarray(self.births, dtype=float).ravel()
        d = np.asarray(self.deaths, dtype=float).ravel()
        e = np.asarray(self.essential, dtype=bool).ravel()
        if not (b.shape == d.shape == e.shape):
            raise ValueError("births, deaths, essential must have equal length")
        object.__setattr__(self, "births", b)
        object.__setattr__(self, "deaths", d)
        object.__setattr__(self, "essential", e)

    def __len__(self) -> int:
        return self.births.size

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.births, self.deaths]) if len(self) else np.zeros((0, 2))

    @property
    def lifespans(self) -> np.ndarray:
        return self.deaths - self.births

    def alive_at(self, t: float) -> np.ndarray:
        """Boolean mask of bars alive at t: b <= t < d, or b <= t <= cap if essential."""
        strict = (self.births <= t) & (t < self.deaths)
        closed = self.essential & (self.births <= t) & (t <= self.deaths)
        return strict | closed

    def betti_at(self, t: float) -> int:
        return int(np.count_nonzero(self.alive_at(t)))

    def sorted(self) -> "PersistenceDiagram":
        order = np.lexsort((~self.essential, self.deaths, self.births))
        return PersistenceDiagram(
            self.dim, self.births[order], self.deaths[order], self.essential[order], self.cap
        )

    @classmethod
    def from_bars(cls, dim, bars, cap):
        """Build from (birth, death, essential) triples."""
        if not bars:
            return cls(dim, np.zeros(0), np.zeros(0), np.zeros(0, dtype=bool), cap)
        b, d, e = zip(*bars)
        return cls(dim, np.array(b, float), np.array(d, float), np.array(e, bool), cap)


def _filtration_order(fc: FilteredComplex):
    """Sorted simplex lists and the edge order shared by both reduction routes."""
    verts = sorted(fc.vertices, key=lambda s: (s[1], s[0]))
    edges = sorted(fc.edges, key=lambda s: (s[2], s[0], s[1]))
    tris = sorted(fc.triangles, key=lambda s: (s[3], s[0], s[1], s[2]))
    return verts, edges, tris


def _resolve_cap(fc: FilteredComplex, cap):
    if cap is not None:
        return float(cap)
    if fc.thresholds is not None:
        return float(fc.thresholds[-1])
    return fc.max_grade()


class _UnionFind:
    """Plain union-find with path compression; roots carry component birth."""

    def __init__(self, n: int, births):
        self.parent = list(range(n))
        self.birth = list(births)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        """Merge; return (dying_birth, None) or None if already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return None
        # elder rule: the younger component (larger birth) dies
        if self.birth[rx] > self.birth[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        dying = self.birth[ry]
        return dying


def _reduce(columns):
    """GF(2) column reduction.  ``columns`` maps column id -> bitmask;
    processed in the given (filtration) order.  Returns (pairs, zeroed) where
    pairs is a list of (pivot_row, column_id) and zeroed the set of column ids
    whose column vanished."""
    pivot: dict[int, int] = {}
    pairs = []
    zeroed = []
    for cid, col in columns:
        while col:
            low = col.bit_length() - 1
            prev = pivot.get(low)
            if prev is None:
                break
            col ^= prev
        if col:
            pivot[col.bit_length() - 1] = col
            pairs.append((col.bit_length() - 1, cid))
        else:
            zeroed.append(cid)
    return pairs, zeroed


def compute_persistence(fc: FilteredComplex, cap=None) -> dict[int, PersistenceDiagram]:
    """Degree 0 and 1 diagrams of a graded flag complex.

    Finite bars with zero persistence are discarded.  Classes alive at the end
    become essential bars with death = ``cap`` (defaults to the complex's last
    threshold, else its maximum grade).
    """
    fc.validate()
    cap = _resolve_cap(fc, cap)
    verts, edges, tris = _filtration_order(fc)
    vid_to_pos = {v: i for i, (v, _) in enumerate(verts)}
    n = len(verts)

    uf = _UnionFind(n, [g for _, g in verts])
    bars0 = []
    merging = np.zeros(len(edges), dtype=bool)
    for j, (u, v, g) in enumerate(edges):
        dying = uf.union(vid_to_pos[u], vid_to_pos[v])
        if dying is not None:
            merging[j] = True
            if dying < g:
                bars0.append((dying, g, False))
    seen_roots = set()
    for i in range(n):
        r = uf.find(i)
        if r not in seen_roots:
            seen_roots.add(r)
            bars0.append((uf.birth[r], cap, True))

    # H1: reduce triangle boundaries; pivots land only on non-merging edges.
    eid_to_pos = {(u, v): j for j, (u, v, _) in enumerate(edges)}
    cols = []
    for t, (u, v, w, _) in enumerate(tris):
        mask = (
            (1 << eid_to_pos[(u, v)])
            | (1 << eid_to_pos[(u, w)])
            | (1 << eid_to_pos[(v, w)])
        )
        cols.append((t, mask))
    pairs, _ = _reduce(cols)
    bars1 = []
    killed = set()
    for erow, tcol in pairs:
        killed.add(erow)
        birth, death = edges[erow][2], tris[tcol][3]
        if birth < death:
            bars1.append((birth, death, False))
    for j in range(len(edges)):
        if not merging[j] and j not in killed:
            bars1.append((edges[j][2], cap, True))

    return {
        0: PersistenceDiagram.from_bars(0, bars0, cap).sorted(),
        1: PersistenceDiagram.from_bars(1, bars1, cap).sorted(),
    }


def compute_persistence_reduction(fc: FilteredComplex, cap=None) -> dict[int, PersistenceDiagram]:
    """Full boundary-matrix reduction over GF(2); same output contract as
    :func:`compute_persistence`."""
    fc.validate()
    cap = _resolve_cap(fc, cap)
    verts, edges, tris = _filtration_order(fc)
    vid_to_pos = {v: i for i, (v, _) in enumerate(verts)}
    eid_to_pos = {(u, v): j for j, (u, v, _) in enumerate(edges)}
    nv, ne = len(verts), len(edges)

    # one global order: vertices, then edges, then triangles, each already
    # sorted; rows of edge columns index vertices, rows of triangle columns
    # index edges shifted past the vertex block, so pivots never collide.
    columns = []
    for j, (u, v, _) in enumerate(edges):
        columns.append((("e", j), (1 << vid_to_pos[u]) | (1 << vid_to_pos[v])))
    for t, (u, v, w, _) in enumerate(tris):
        mask = (
            (1 << (nv + eid_to_pos[(u, v)]))
            | (1 << (nv + eid_to_pos[(u, w)]))
            | (1 << (nv + eid_to_pos[(v, w)]))
        )
        columns.append((("t", t), mask))
    order = {("e", j): (edges[j][2], 1, edges[j][0], edges[j][1]) for j in range(ne)}
    order |= {("t", t): (tris[t][3], 2, tris[t][0], tris[t][1], tris[t][2]) for t in range(len(tris))}
    columns.sort(key=lambda c: order[c[0]])
    pairs, zeroed = _reduce(columns)

    paired_vert_rows = set()
    paired_edge_rows = set()
    bars0, bars1 = [], []
    for low, cid in pairs:
        kind, idx = cid
        if kind == "e":
            paired_vert_rows.add(low)
            birth, death = verts[low][1], edges[idx][2]
            if birth < death:
                bars0.append((birth, death, False))
        else:
            erow = low - nv
            paired_edge_rows.add(erow)
            birth, death = edges[erow][2], tris[idx][3]
            if birth < death:
                bars1.append((birth, death, False))
    for i in range(nv):
        if i not in paired_vert_rows:
            bars0.append((verts[i][1], cap, True))
    zero_edges = {idx for kind, idx in zeroed if kind == "e"}
    for j in zero_edges:
        if j not in paired_edge_rows:
            bars1.append((edges[j][2], cap, True))

    return {
        0: PersistenceDiagram.from_bars(0, bars0, cap).sorted(),
        1: PersistenceDiagram.from_bars(1, bars1, cap).sorted(),
    }


def betti_at(fc: FilteredComplex, grade: float, dim: int, cap=None) -> int:
    """Betti number of the sub-complex of grades <= ``grade`` (dim 0 or 1)."""
    if dim not in (0, 1):
        raise ValueError("only dimensions 0 and 1 are computed")
    return compute_persistence(fc, cap)[dim].betti_at(grade)


def format_diagrams(diagrams: dict[int, PersistenceDiagram]) -> str:
    """One line per bar: ``dim birth death essential``."""
    lines = []
    for dim in sorted(diagrams):
        dg = diagrams[dim]
        for b, d, e in zip(dg.births, dg.deaths, dg.essential):
            lines.append(f"{dim} {b:.17g} {d:.17g} {int(e)}")
    return "\n".join(lines)
