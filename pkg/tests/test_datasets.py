import numpy as np
import pytest

from emp import DataError, Graph, GraphDataset, load_tudataset, save_tudataset

from conftest import random_graph


def _write(d, name, files):
    d.mkdir(exist_ok=True)
    for suffix, lines in files.items():
        (d / f"{name}_{suffix}.txt").write_text("".join(f"{l}\n" for l in lines))


class TestLoad:
    def test_two_triangles(self, tmp_path):
        d = tmp_path / "TOY"
        _write(
            d,
            "TOY",
            {
                "A": ["1, 2", "2, 1", "2, 3", "3, 2", "1, 3", "3, 1",
                      "4, 5", "5, 4", "5, 6", "6, 5"],
                "graph_indicator": ["1", "1", "1", "2", "2", "2"],
                "graph_labels": ["1", "-1"],
            },
        )
        ds = load_tudataset(d)
        assert ds.name == "TOY"
        assert len(ds) == 2
        assert ds.labels.tolist() == [1, -1]
        assert ds.graphs[0].edges == ((0, 1), (0, 2), (1, 2))
        assert ds.graphs[1].edges == ((0, 1), (1, 2))
        assert ds.graphs[1].node_count == 3
        assert ds.graphs[0].label == 1

    def test_attributes_and_weights(self, tmp_path):
        d = tmp_path / "W"
        _write(
            d,
            "W",
            {
                "A": ["1, 2", "2, 1"],
                "graph_indicator": ["1", "1"],
                "graph_labels": ["0"],
                "node_attributes": ["1.5, 2.5", "3.5, 4.5"],
                "edge_attributes": ["9.25", "9.25"],
            },
        )
        ds = load_tudataset(d, weight_attribute=0)
        g = ds.graphs[0]
        assert ds.node_attribute_dim == 2
        assert ds.edge_attribute_dim == 1
        assert g.node_attributes[1].tolist() == [3.5, 4.5]
        assert g.edge_weights.tolist() == [9.25]

    def test_node_labels_appended(self, tmp_path):
        d = tmp_path / "L"
        _write(
            d,
            "L",
            {
                "A": ["1, 2", "2, 1"],
                "graph_indicator": ["1", "1"],
                "graph_labels": ["0"],
                "node_attributes": ["0.5", "1.5"],
                "node_labels": ["7", "8"],
            },
        )
        ds = load_tudataset(d)
        assert ds.node_attribute_dim == 2
        assert ds.graphs[0].node_attributes.tolist() == [[0.5, 7.0], [1.5, 8.0]]

    def test_dedupes_and_ignores_self_loops(self, tmp_path):
        d = tmp_path / "D"
        _write(
            d,
            "D",
            {
                "A": ["1, 1", "1, 2", "2, 1", "2, 1"],
                "graph_indicator": ["1", "1"],
                "graph_labels": ["0"],
            },
        )
        ds = load_tudataset(d)
        assert ds.graphs[0].edges == ((0, 1),)

    def test_missing_file(self, tmp_path):
        d = tmp_path / "M"
        _write(d, "M", {"A": ["1, 2", "2, 1"], "graph_indicator": ["1", "1"]})
        with pytest.raises(DataError):
            load_tudataset(d)

    def test_malformed_numbers(self, tmp_path):
        d = tmp_path / "B"
        _write(
            d,
            "B",
            {
                "A": ["1, x"],
                "graph_indicator": ["1"],
                "graph_labels": ["0"],
            },
        )
        with pytest.raises(DataError):
            load_tudataset(d)

    def test_cross_graph_edge(self, tmp_path):
        d = tmp_path / "X"
        _write(
            d,
            "X",
            {
                "A": ["1, 2", "2, 1"],
                "graph_indicator": ["1", "2"],
                "graph_labels": ["0", "1"],
            },
        )
        with pytest.raises(DataError):
            load_tudataset(d)

    def test_edge_out_of_range(self, tmp_path):
        d = tmp_path / "R"
        _write(
            d,
            "R",
            {
                "A": ["1, 9", "9, 1"],
                "graph_indicator": ["1", "1"],
                "graph_labels": ["0"],
            },
        )
        with pytest.raises(DataError):
            load_tudataset(d)

    def test_non_integer_labels(self, tmp_path):
        d = tmp_path / "F"
        _write(
            d,
            "F",
            {
                "A": ["1, 2", "2, 1"],
                "graph_indicator": ["1", "1"],
                "graph_labels": ["0.5"],
            },
        )
        with pytest.raises(DataError):
            load_tudataset(d)


class TestRoundTrip:
    def test_save_then_load(self, rng, tmp_path):
        graphs = []
        for i in range(6):
            g = random_graph(rng, max_nodes=8, min_nodes=2, label=i % 2)
            graphs.append(
                Graph(
                    g.node_count,
                    g.edges,
                    node_attributes=rng.normal(size=(g.node_count, 2)),
                    edge_attributes=rng.normal(size=(g.edge_count, 1))
                    if g.edge_count
                    else None,
                    label=g.label,
                )
            )
        ds = GraphDataset("RT", tuple(graphs), np.array([g.label for g in graphs]))
        save_tudataset(ds, tmp_path / "RT")
        back = load_tudataset(tmp_path / "RT")
        assert len(back) == len(ds)
        assert back.labels.tolist() == ds.labels.tolist()
        for a, b in zip(ds.graphs, back.graphs):
            assert a.node_count == b.node_count
            assert a.edges == b.edges
            np.testing.assert_allclose(a.node_attributes, b.node_attributes, atol=1e-15)
            if a.edge_count:
                np.testing.assert_allclose(a.edge_attributes, b.edge_attributes, atol=1e-15)


class TestContainer:
    def test_stats(self):
        g1 = Graph.from_edges(3, [(0, 1), (1, 2)], label=0)
        g2 = Graph.from_edges(2, [(0, 1)], label=1)
        ds = GraphDataset("S", (g1, g2), np.array([0, 1]))
        s = ds.stats()
        assert s["n_graphs"] == 2
        assert s["n_classes"] == 2
        assert s["avg_nodes"] == 2.5
        assert s["avg_edges"] == 1.5

    def test_label_count_checked(self):
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(DataError):
            GraphDataset("S", (g,), np.array([0, 1]))
