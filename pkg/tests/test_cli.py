"""The build and serve entry points."""

import json
import random

import pytest

from archex.cli import build_parser, main, run_serve
from archex.export import load_similarity, load_theme_tree
from archex.ingest import write_archive
from archex.visual_similarity import write_embeddings

from helpers import make_records


@pytest.fixture()
def inputs(tmp_path):
    records = make_records(80, seed=61)
    archive = tmp_path / "archive.csv"
    with open(archive, "w", encoding="utf-8", newline="") as fh:
        write_archive(records, fh)
    rng = random.Random(2)
    rows = {r.id: [rng.gauss(0, 1) for _ in range(8)] for r in records}
    embeddings = tmp_path / "embeddings.txt"
    write_embeddings(rows, 8, embeddings)
    geo = tmp_path / "geo"
    geo.mkdir()
    base = {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "properties": {"fips": "19099"},
                "geometry": {"type": "Polygon",
                             "coordinates": [[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 0.0]]]},
            }
        ],
    }
    (geo / "counties.geojson").write_text(json.dumps(base))
    states = {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "properties": {"state": "Iowa"},
                "geometry": {"type": "Polygon",
                             "coordinates": [[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 0.0]]]},
            }
        ],
    }
    (geo / "states.geojson").write_text(json.dumps(states))
    return {"records": records, "archive": archive, "embeddings": embeddings, "geo": geo}


class TestBuild:
    def test_full_pipeline(self, inputs, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(
            [
                "build",
                "--archive", str(inputs["archive"]),
                "--embeddings", str(inputs["embeddings"]),
                "--geo", str(inputs["geo"]),
                "--out", str(out),
                "--k", "5",
            ]
        )
        assert code == 0
        printed = capsys.readouterr().out
        assert "accepted" in printed

        graphs = load_similarity(out)
        assert set(graphs) == {"text", "visual"}
        assert graphs["visual"].k == 5
        assert load_theme_tree(out / "themes.json").roots
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["similarity_files"] > 0
        assert manifest["geo_files"] == 2
        assert manifest["theme_files"] == 1
        counties = json.loads((out / "counties.geojson").read_text())
        assert "count" in counties["features"][0]["properties"]
        report = json.loads((out / "ingest_report.json").read_text())
        assert report["accepted"] == len(inputs["records"])

    def test_build_without_optional_inputs(self, inputs, tmp_path):
        out = tmp_path / "min"
        code = main(["build", "--archive", str(inputs["archive"]), "--out", str(out)])
        assert code == 0
        graphs = load_similarity(out)
        assert set(graphs) == {"text"}
        assert not (out / "counties.geojson").exists()


class TestServe:
    def test_port_env_overrides_flag(self, inputs, monkeypatch):
        captured = {}

        def fake_run(app, host, port, log_level):
            captured["port"] = port
            captured["host"] = host

        import uvicorn

        monkeypatch.setattr(uvicorn, "run", fake_run)
        monkeypatch.setenv("PORT", "9191")
        args = build_parser().parse_args(
            [
                "serve",
                "--archive", str(inputs["archive"]),
                "--embeddings", str(inputs["embeddings"]),
                "--geo", str(inputs["geo"]),
                "--port", "8000",
            ]
        )
        assert run_serve(args) == 0
        assert captured["port"] == 9191

    def test_serve_requires_inputs(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["serve", "--archive", "a.csv"])
