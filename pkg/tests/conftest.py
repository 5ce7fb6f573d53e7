import numpy as np
import pytest

from emp import Graph, PersistenceDiagram


def random_graph(rng, max_nodes=12, min_nodes=1, p=None, label=None) -> Graph:
    n = int(rng.integers(min_nodes, max_nodes + 1))
    prob = float(rng.uniform(0.1, 0.9)) if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return Graph.from_edges(n, edges, label=label)


def random_values(rng, size, integer=False) -> np.ndarray:
    if integer:
        return rng.integers(0, 5, size).astype(float)
    return np.round(rng.uniform(0.0, 4.0, size), 3)


def random_diagram(rng, max_points=5, cap=None) -> PersistenceDiagram:
    k = int(rng.integers(0, max_points + 1))
    births = np.round(rng.uniform(0.0, 3.0, k), 3)
    spans = np.round(rng.uniform(0.05, 2.0, k), 3)
    deaths = births + spans
    top = float(deaths.max()) if k else 1.0
    return PersistenceDiagram(
        0, births, deaths, np.zeros(k, dtype=bool), cap if cap is not None else top
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
