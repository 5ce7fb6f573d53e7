"""Graph descriptors and threshold slicing, on a small molecule-shaped graph.

Run: python demos/01_filters_and_slices.py
"""

import numpy as np

from emp import (
    Graph,
    compute_edge_filter,
    compute_node_filter,
    select_thresholds,
    sublevel_slices,
)

# a hexagon with a two-atom tail, like a benzene ring with a substituent
ring = [(i, (i + 1) % 6) for i in range(6)]
g = Graph.from_edges(8, ring + [(0, 6), (6, 7)])
print("graph:", g.node_count, "nodes,", g.edge_count, "edges")

# node descriptors
for kind in ("degree", "closeness", "betweenness", "katz"):
    vals = compute_node_filter(g, kind).values
    print(f"{kind:>12}: {np.round(vals, 3)}")

# edge descriptors
for kind in ("forman_ricci", "edge_betweenness"):
    vals = compute_edge_filter(g, kind).values
    print(f"{kind:>16}: {np.round(vals, 3)}")

# pick thresholds over the degree values and slice the graph
deg = compute_node_filter(g, "degree").values
alphas, degenerate = select_thresholds(deg, 4, "quantile")
print("\nthresholds over degree:", alphas, "(degenerate)" if degenerate else "")

slices = sublevel_slices(g, deg, alphas)
for a, s in zip(alphas, slices):
    print(f"  f <= {a}: nodes={s.node_ids.tolist()} edges={[tuple(e) for e in s.edge_list()]}")

# each slice is contained in the next one
for prev, cur in zip(slices.slices, slices.slices[1:]):
    assert prev.is_subslice_of(cur)
print("slices are nested, as expected")
