"""Persistence diagrams of a single graded complex, computed two ways.

Run: python demos/00_persistence_basics.py
"""

import numpy as np

from emp import (
    Graph,
    betti_at,
    clique_complex,
    compute_persistence,
    compute_persistence_reduction,
    format_diagrams,
    full_slice,
    power_filtration,
)

# grade a 4-cycle by node values; vertex 2 enters before either of its edges,
# so it starts its own component, and the cycle closes once the largest value
# arrives
square = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
values = np.array([1.0, 3.0, 2.0, 4.0])
fc = clique_complex(full_slice(square), values, thresholds=np.sort(values))
print("vertices :", fc.vertices)
print("edges    :", fc.edges)
print("triangles:", fc.triangles)

diagrams = compute_persistence(fc)
print("\nbars as 'dim birth death essential':")
print(format_diagrams(diagrams))

# the component born at 2 merges into the older one at 3 (elder rule); the
# cycle class never dies, so its bar is capped at the last threshold
pd0, pd1 = diagrams[0], diagrams[1]
print("H0 components at grade 2:", pd0.betti_at(2.0))
print("H0 components at grade 3:", pd0.betti_at(3.0))
print("H1 born at grade 4:", pd1.births.tolist(), "essential:", pd1.essential.tolist())

# an independent full-reduction route gives the same answer
alt = compute_persistence_reduction(fc)
for dim in (0, 1):
    assert np.array_equal(diagrams[dim].sorted().points, alt[dim].sorted().points)
print("column-reduction route agrees")

# betti numbers straight from the complex, without building diagrams
for t in np.sort(values):
    b0 = betti_at(fc, t, 0)
    b1 = betti_at(fc, t, 1)
    print(f"grade {t}: betti_0={b0} betti_1={b1}")

# the same square under a distance filtration: vertices enter together, the
# far corners connect at scale 3, and the filled square kills the cycle
fc_pow = power_filtration(square, np.array([1.0, 2.0, 3.0]))
print("\npower filtration bars:")
print(format_diagrams(compute_persistence(fc_pow)))
