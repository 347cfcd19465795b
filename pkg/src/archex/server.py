"""HTTP query surface for one immutable archive snapshot.

Every endpoint is read-only and serves the snapshot loaded at startup; a new
export plus a restart is the update path. Filters arrive as URL query strings
so any exploration state is bookmarkable. Responses are canonical JSON
(sorted keys), byte-identical across restarts of the same snapshot, and the
theme/geo endpoints serve exactly the bytes the static exporter would write
for the same filter.

Similarity strips come from the graphs precomputed at startup; nothing is
scored per-request.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import IO, Mapping

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .errors import InvalidFilterError
from .export import canonical_dumps, export_geojson, neighbors_payload, theme_tree_payload
from .facets import DEFAULT_PAGE_SIZE, AggregateSet, FacetIndex, FilterState, build_index
from .graphs import DEFAULT_K, METHOD_TEXT, METHOD_VISUAL, SimilarityGraph
from .ingest import build_gazetteer, parse_archive
from .records import IngestReport, PhotoRecord
from .text_similarity import build_text_graph, build_tfidf, tokenize_captions
from .visual_similarity import build_visual_graph, load_embeddings

GEO_JSON_MEDIA_TYPE = "application/geo+json"

_GRID_FIELDS = ("id", "thumb_url", "photographer", "year", "month", "state", "county_name")


class ApiError(Exception):
    """Error envelope: HTTP status, machine-readable code, human message."""

    def __init__(self, status: int, code: str, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


@dataclass
class Snapshot:
    """Everything one server process serves, built once at startup."""

    records: tuple[PhotoRecord, ...]
    index: FacetIndex
    graphs: dict[str, SimilarityGraph]
    ingest_report: IngestReport
    counties_base: dict | None = None
    states_base: dict | None = None
    page_size: int = DEFAULT_PAGE_SIZE
    by_id: dict[str, PhotoRecord] = dataclass_field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.by_id:
            self.by_id = {r.id: r for r in self.records}


def build_snapshot(
    archive: IO[str] | str | Path,
    embeddings: IO[str] | str | Path | None = None,
    geo_dir: str | Path | None = None,
    k: int = DEFAULT_K,
    page_size: int = DEFAULT_PAGE_SIZE,
) -> Snapshot:
    """Run ingest -> index -> recommendation graphs and load geo bases."""
    records, report = parse_archive(archive)
    index = build_index(records)
    gazetteer = build_gazetteer(records)
    model = build_tfidf(tokenize_captions(records, gazetteer))
    graphs: dict[str, SimilarityGraph] = {METHOD_TEXT: build_text_graph(model, k)}
    if embeddings is not None:
        matrix = load_embeddings(embeddings, records)
        graphs[METHOD_VISUAL] = build_visual_graph(matrix, k)

    counties_base = states_base = None
    if geo_dir is not None:
        counties_path = Path(geo_dir) / "counties.geojson"
        states_path = Path(geo_dir) / "states.geojson"
        if counties_path.is_file():
            counties_base = json.loads(counties_path.read_text(encoding="utf-8"))
        if states_path.is_file():
            states_base = json.loads(states_path.read_text(encoding="utf-8"))

    return Snapshot(
        records=tuple(sorted(records, key=lambda r: r.id)),
        index=index,
        graphs=graphs,
        ingest_report=report,
        counties_base=counties_base,
        states_base=states_base,
        page_size=page_size,
    )


def _int_param(params: Mapping[str, str], name: str) -> int | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InvalidFilterError(f"{name} must be an integer, got {raw!r}") from None


def decode_filter(params, default_page_size: int = DEFAULT_PAGE_SIZE) -> FilterState:
    """Decode URL query parameters into a validated FilterState.

    `photographer` may be repeated; `theme` is a '/'-joined prefix path.
    Raises InvalidFilterError for malformed numbers, empty theme nodes, or any
    FilterState invariant violation.
    """
    theme_raw = params.get("theme")
    theme_prefix = None
    if theme_raw:
        theme_prefix = tuple(part.strip() for part in theme_raw.split("/"))
    page = _int_param(params, "page")
    page_size = _int_param(params, "page_size")
    filt = FilterState(
        state=params.get("state") or None,
        county_fips=params.get("county") or None,
        photographers=frozenset(p for p in params.getlist("photographer") if p),
        year_start=_int_param(params, "year_start"),
        year_end=_int_param(params, "year_end"),
        theme_prefix=theme_prefix,
        page=0 if page is None else page,
        page_size=default_page_size if page_size is None else page_size,
    )
    filt.validate()
    return filt


def aggregates_payload(aggregates: AggregateSet) -> dict:
    timeline: dict[str, dict[str, int]] = {}
    for (photographer, year), count in sorted(aggregates.timeline.items()):
        timeline.setdefault(photographer, {})[str(year)] = count
    return {
        "total": aggregates.total,
        "county_counts": dict(sorted(aggregates.county_counts.items())),
        "state_counts": dict(sorted(aggregates.state_counts.items())),
        "timeline": timeline,
        "theme_counts": {
            "/".join(path): count for path, count in sorted(aggregates.theme_counts.items())
        },
    }


def grid_record_payload(record: PhotoRecord) -> dict:
    return {name: getattr(record, name) for name in _GRID_FIELDS}


def record_detail_payload(snapshot: Snapshot, record: PhotoRecord) -> dict:
    doc = {
        "id": record.id,
        "caption": record.caption,
        "photographer": record.photographer,
        "year": record.year,
        "month": record.month,
        "state": record.state,
        "county_fips": record.county_fips,
        "county_name": record.county_name,
        "lat": record.lat,
        "lon": record.lon,
        "theme_path": list(record.theme_path) if record.theme_path is not None else None,
        "image_url": record.image_url,
        "thumb_url": record.thumb_url,
        "neighbors": neighbors_payload(snapshot.graphs.values(), record.id),
    }
    if record.lat is not None and record.lon is not None:
        doc["map_point"] = {"lat": record.lat, "lon": record.lon}
    return doc


def _canonical_response(payload, media_type: str = "application/json") -> Response:
    return Response(content=canonical_dumps(payload) + "\n", media_type=media_type)


def create_app(snapshot: Snapshot) -> FastAPI:
    app = FastAPI(title="archive explorer API", docs_url=None, redoc_url=None)
    # Read-only API; let any statically hosted UI call it.
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["GET"])

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError) -> Response:
        payload = {"status": exc.status, "code": exc.code, "message": exc.message}
        return Response(
            content=canonical_dumps(payload) + "\n",
            media_type="application/json",
            status_code=exc.status,
        )

    @app.exception_handler(InvalidFilterError)
    async def handle_invalid_filter(request: Request, exc: InvalidFilterError) -> Response:
        return await handle_api_error(request, ApiError(400, "invalid_filter", str(exc)))

    @app.exception_handler(Exception)
    async def handle_internal(request: Request, exc: Exception) -> Response:
        return await handle_api_error(request, ApiError(500, "internal", "internal error"))

    def decoded_filter(request: Request) -> FilterState:
        return decode_filter(request.query_params, default_page_size=snapshot.page_size)

    @app.get("/api/photos")
    def photos(request: Request) -> Response:
        result = snapshot.index.query(decoded_filter(request))
        payload = {
            "aggregates": aggregates_payload(result.aggregates),
            "page": result.page,
            "total_pages": result.total_pages,
            "page_records": [grid_record_payload(r) for r in result.page_records],
        }
        return _canonical_response(payload)

    @app.get("/api/photos/{photo_id}")
    def photo_detail(photo_id: str) -> Response:
        record = snapshot.by_id.get(photo_id)
        if record is None:
            raise ApiError(404, "not_found", f"no photo with id {photo_id!r}")
        return _canonical_response(record_detail_payload(snapshot, record))

    @app.get("/api/themes")
    def themes(request: Request) -> Response:
        tree = snapshot.index.theme_tree(decoded_filter(request))
        return _canonical_response(theme_tree_payload(tree))

    def geo_endpoint(request: Request, base: dict | None, name: str) -> Response:
        if base is None:
            raise ApiError(404, "not_found", f"no {name} geometry loaded")
        doc = export_geojson(snapshot.index, base, decoded_filter(request))
        return _canonical_response(doc, media_type=GEO_JSON_MEDIA_TYPE)

    @app.get("/geo/counties")
    def geo_counties(request: Request) -> Response:
        return geo_endpoint(request, snapshot.counties_base, "county")

    @app.get("/geo/states")
    def geo_states(request: Request) -> Response:
        return geo_endpoint(request, snapshot.states_base, "state")

    return app
