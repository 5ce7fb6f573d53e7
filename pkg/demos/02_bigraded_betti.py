"""Bigraded Betti matrices: component and cycle counts over a 2d threshold grid.

Run: python demos/02_bigraded_betti.py
"""

import numpy as np

from emp import Graph, ThresholdGrid, compute_node_filter, emp_betti

# two graphs with the same size but different shape: a cycle with a chord
# versus a tree
cyclic = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
tree = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])

for name, g in (("cycle+chord", cyclic), ("tree", tree)):
    deg = compute_node_filter(g, "degree").values
    clo = compute_node_filter(g, "closeness").values
    grid = ThresholdGrid.from_values(deg, clo, shape=(4, 4))
    print(f"\n== {name} ==")
    print("alphas (degree):   ", np.round(grid.alphas, 3))
    print("betas  (closeness):", np.round(grid.betas, 3))

    # cell (i, j) counts features of the subgraph with degree <= alpha_i
    # and closeness <= beta_j
    for dim in (0, 1):
        m = emp_betti(g, "degree", "closeness", grid, homology_dim=dim)
        print(f"betti_{dim} matrix:")
        print(m.data.astype(int))

# swapping the two directions transposes the betti matrix
grid = ThresholdGrid.from_values(
    compute_node_filter(cyclic, "degree").values,
    compute_node_filter(cyclic, "closeness").values,
    shape=(4, 4),
)
swapped = ThresholdGrid(grid.betas, grid.alphas, grid.strategy)
fg = emp_betti(cyclic, "degree", "closeness", grid, homology_dim=1)
gf = emp_betti(cyclic, "closeness", "degree", swapped, homology_dim=1, order_tag="gf")
assert np.array_equal(fg.data, gf.data.T)
print("\nswapped direction order gives the transposed matrix")
