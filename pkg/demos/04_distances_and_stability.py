"""Diagram distances and the stability bound between the two pipeline metrics.

Run: python demos/04_distances_and_stability.py
"""

import math

import numpy as np

from emp import (
    Graph,
    PersistenceDiagram,
    ThresholdGrid,
    compute_node_filter,
    stability_check,
    wasserstein,
)

# matching distances between two small hand-made diagrams
pd_a = PersistenceDiagram.from_bars(1, [(0.0, 1.0, False), (0.5, 0.8, False)], cap=2.0)
pd_b = PersistenceDiagram.from_bars(1, [(0.1, 1.1, False)], cap=2.0)
for p in (1.0, 2.0, math.inf):
    print(f"W_{p}: {wasserstein(pd_a, pd_b, p):.6f}")

# unmatched points pay the cost of collapsing to zero persistence
lonely = PersistenceDiagram.from_bars(1, [(0.0, 1.0, False)], cap=2.0)
empty = PersistenceDiagram.from_bars(1, [], cap=2.0)
print("point vs empty:", wasserstein(lonely, empty, math.inf), "(= half the lifespan)")


def drop_one_edge(g: Graph, rng) -> Graph:
    keep = [e for i, e in enumerate(g.edges) if i != rng.integers(g.edge_count)]
    return Graph.from_edges(g.node_count, keep)


# perturb graphs by deleting an edge and compare the two distances on a
# shared grid: the summary-matrix distance never exceeds the induced
# matching distance for sup-norm landscape rows
rng = np.random.default_rng(42)
pairs = []
for _ in range(8):
    n = int(rng.integers(6, 11))
    mask = np.triu(rng.random((n, n)) < 0.45, 1)
    g = Graph.from_edges(n, list(zip(*np.nonzero(mask))))
    if g.edge_count < 2:
        continue
    pairs.append((g, drop_one_edge(g, rng)))

pooled = np.concatenate([compute_node_filter(g, "degree").values for pair in pairs for g in pair])
grid = ThresholdGrid.from_values(pooled, pooled, shape=(4, 5))

reports = stability_check(pairs, "degree", "degree", grid, method="landscape", homology_dim=0)
print(f"\n{'pair':>4} {'induced':>10} {'summary':>10} {'ratio':>8}")
for r in reports:
    ratio = "-" if r.ratio is None else f"{r.ratio:.4f}"
    print(f"{r.pair_id:>4} {r.induced:>10.4f} {r.emp:>10.4f} {ratio:>8}")

violations = sum(1 for r in reports if r.emp > r.induced + 1e-9)
print("violations of the bound:", violations)
