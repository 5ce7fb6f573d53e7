import json

import numpy as np
import pytest

from emp import GraphDataset, read_features, save_tudataset
from emp.cli import main

from conftest import random_graph


@pytest.fixture
def dataset_dir(rng, tmp_path):
    graphs = tuple(
        random_graph(rng, max_nodes=8, min_nodes=3, label=i % 2) for i in range(6)
    )
    ds = GraphDataset("TOY", graphs, np.array([g.label for g in graphs]))
    d = tmp_path / "TOY"
    save_tudataset(ds, d)
    return d


class TestCompute:
    def test_writes_feature_files(self, dataset_dir, tmp_path, capsys):
        out = tmp_path / "feat"
        code = main(
            [
                "compute",
                "--data", str(dataset_dir),
                "--grid", "4x4",
                "--out", str(out),
            ]
        )
        assert code == 0
        printed = capsys.readouterr().out.strip().splitlines()
        assert printed == [str(out) + ".csv", str(out) + ".json"]
        back = read_features(str(out) + ".csv")
        assert back["labels"].size == 6
        assert back["meta"]["config"]["method"] == "betti"

    def test_method_flags(self, dataset_dir, tmp_path):
        out = tmp_path / "land"
        code = main(
            [
                "compute",
                "--data", str(dataset_dir),
                "--grid", "3x3",
                "--method", "landscape",
                "--landscape-order", "2",
                "--dims", "0",
                "--out", str(out),
            ]
        )
        assert code == 0
        meta = json.loads((tmp_path / "land.json").read_text())
        assert meta["config"]["method"] == "landscape"
        assert meta["config"]["method_params"] == {"order": 2}
        assert meta["config"]["homology_dims"] == [0]

    def test_bad_grid_is_config_error(self, dataset_dir, tmp_path):
        code = main(
            ["compute", "--data", str(dataset_dir), "--grid", "4xx", "--out", str(tmp_path / "x")]
        )
        assert code == 2

    def test_missing_dataset_is_data_error(self, tmp_path):
        code = main(
            ["compute", "--data", str(tmp_path / "nope"), "--out", str(tmp_path / "x")]
        )
        assert code == 3


class TestStability:
    def test_report_and_summary_line(self, dataset_dir, tmp_path, capsys):
        out = tmp_path / "rep.jsonl"
        code = main(
            [
                "stability",
                "--data", str(dataset_dir),
                "--grid", "3x3",
                "--pairs", "3",
                "--out", str(out),
            ]
        )
        assert code == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith("pairs=3 ")
        assert "violations=0" in line
        recs = [json.loads(l) for l in out.read_text().splitlines()]
        assert len(recs) == 3
        for rec in recs:
            assert rec["emp"] <= rec["induced"] + 1e-9

    def test_too_few_graphs(self, dataset_dir, tmp_path):
        code = main(
            [
                "stability",
                "--data", str(dataset_dir),
                "--pairs", "99",
                "--out", str(tmp_path / "r.jsonl"),
            ]
        )
        assert code == 3


class TestDiagram:
    def test_prints_slices(self, dataset_dir, capsys):
        code = main(
            ["diagram", "--data", str(dataset_dir), "--grid", "3x3", "--graph", "0"]
        )
        assert code == 0
        out = capsys.readouterr().out
        headers = [l for l in out.splitlines() if l.startswith("# slice")]
        assert len(headers) >= 2
        assert "alpha=" in headers[0]

    def test_index_out_of_range(self, dataset_dir):
        code = main(["diagram", "--data", str(dataset_dir), "--graph", "42"])
        assert code == 3
