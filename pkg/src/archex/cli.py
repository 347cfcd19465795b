"""Command-line entry points.

`archex build` runs ingest -> index -> recommendation graphs -> static export
without serving; `archex serve` builds the same snapshot in memory and serves
the query API. The PORT environment variable overrides --port.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .export import (
    COUNTIES_FILE,
    STATES_FILE,
    ExportManifest,
    export_geojson,
    export_similarity,
    export_theme_tree,
    verify_manifest,
    write_canonical_json,
    write_manifest,
)
from .facets import DEFAULT_PAGE_SIZE, FilterState
from .graphs import DEFAULT_K
from .server import build_snapshot, create_app


def _add_snapshot_args(parser: argparse.ArgumentParser, require_inputs: bool) -> None:
    parser.add_argument("--archive", required=True, help="archive CSV path")
    parser.add_argument(
        "--embeddings",
        required=require_inputs,
        default=None,
        help="embedding file path" + ("" if require_inputs else " (optional)"),
    )
    parser.add_argument(
        "--geo",
        required=require_inputs,
        default=None,
        help="directory holding counties.geojson / states.geojson"
        + ("" if require_inputs else " (optional)"),
    )
    parser.add_argument("--k", type=int, default=DEFAULT_K, help="neighbors per photo")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="archex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="serve the query API for one archive snapshot")
    _add_snapshot_args(serve, require_inputs=True)
    serve.add_argument("--port", type=int, default=8000, help="port (PORT env overrides)")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument(
        "--page-size", type=int, default=DEFAULT_PAGE_SIZE, help="default results per page"
    )

    build = sub.add_parser("build", help="run ingest, graphs, and static export")
    _add_snapshot_args(build, require_inputs=False)
    build.add_argument("--out", required=True, help="export root directory")
    return parser


def run_build(args: argparse.Namespace) -> int:
    out = Path(args.out)
    snapshot = build_snapshot(
        args.archive, embeddings=args.embeddings, geo_dir=args.geo, k=args.k
    )
    report = snapshot.ingest_report
    print(
        f"ingest: {report.accepted}/{report.total_rows} rows accepted, "
        f"{len(report.rejected)} rejected"
    )

    manifest = export_similarity(list(snapshot.graphs.values()), out)
    everything = FilterState()
    manifest = manifest.merge(export_theme_tree(snapshot.index.theme_tree(everything), out))
    for base, name in (
        (snapshot.counties_base, COUNTIES_FILE),
        (snapshot.states_base, STATES_FILE),
    ):
        if base is None:
            continue
        doc = export_geojson(snapshot.index, base, everything)
        geo_manifest = ExportManifest(root=out, geo_files=1)
        geo_manifest.checksums[name] = write_canonical_json(doc, out / name)
        manifest = manifest.merge(geo_manifest)

    verify_manifest(manifest)
    write_manifest(manifest)
    report_payload = {
        "total_rows": report.total_rows,
        "accepted": report.accepted,
        "rejected": [[line, reason] for line, reason in report.rejected],
        "field_fill_rates": report.field_fill_rates,
    }
    write_canonical_json(report_payload, out / "ingest_report.json")
    print(
        f"export: {manifest.similarity_files} similarity files, "
        f"{manifest.geo_files} geo files, {manifest.theme_files} theme file(s) -> {out}"
    )
    return 0


def run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    snapshot = build_snapshot(
        args.archive,
        embeddings=args.embeddings,
        geo_dir=args.geo,
        k=args.k,
        page_size=args.page_size,
    )
    app = create_app(snapshot)
    port = int(os.environ.get("PORT", args.port))
    print(f"serving {len(snapshot.records)} records on {args.host}:{port}")
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "build":
        return run_build(args)
    return run_serve(args)


if __name__ == "__main__":
    sys.exit(main())
