"""Static artifact writers: sharded similarity files, count-annotated GeoJSON, themes.json.

Everything is written as canonical JSON — sorted keys, compact separators,
scores at six significant digits, one trailing newline — so re-exporting the
same structures is byte-identical and a plain diff shows real changes only.
Similarity files are sharded two levels deep (`similar/<id[:2]>/<id>.json`)
to keep directories small at full archive scale.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import ExportError
from .facets import FacetIndex, FilterState, ThemeNode, ThemeTree
from .graphs import Neighbor, SimilarityGraph

SIMILAR_DIR = "similar"
SIMILAR_META_FILE = "meta.json"
THEMES_FILE = "themes.json"
COUNTIES_FILE = "counties.geojson"
STATES_FILE = "states.geojson"
MANIFEST_FILE = "manifest.json"

# Inset repositioning for territories outside the contiguous map frame,
# applied to GeoJSON lon/lat as (x, y) -> (scale*x + dx, scale*y + dy).
# The constants are fixtures: the bounding boxes below assert where each
# territory's centroid must land after the transform. Source geometry is
# assumed to use western-hemisphere (negative) longitudes.
INSET_TRANSFORMS: dict[str, tuple[float, float, float]] = {
    "Alaska": (0.35, -64.3, 4.6),
    "Hawaii": (1.0, 50.5, 5.0),
    "Puerto Rico": (1.5, 16.6, -3.8),
    "U.S. Virgin Islands": (1.5, 16.6, -3.8),
}
INSET_FIPS_PREFIXES = {
    "02": "Alaska",
    "15": "Hawaii",
    "72": "Puerto Rico",
    "78": "U.S. Virgin Islands",
}
# (lon_min, lat_min, lon_max, lat_max) after repositioning.
INSET_BOUNDS: dict[str, tuple[float, float, float, float]] = {
    "Alaska": (-126.0, 21.0, -109.0, 33.0),
    "Hawaii": (-112.0, 22.0, -101.0, 29.0),
    "Puerto Rico": (-86.0, 21.0, -77.0, 26.0),
    "U.S. Virgin Islands": (-86.0, 21.0, -77.0, 26.0),
}


def round_score(score: float) -> float:
    """Similarity scores are persisted at six significant digits."""
    return float(f"{score:.6g}")


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def write_canonical_json(payload, path: Path) -> str:
    """Write canonical JSON (with trailing newline); returns the sha256 hex digest."""
    text = canonical_dumps(payload) + "\n"
    path.parent.mkdir(parents=True, exist_ok=True)
    data = text.encode("utf-8")
    path.write_bytes(data)
    return hashlib.sha256(data).hexdigest()


@dataclass
class ExportManifest:
    """What one export wrote: per-class file counts and a checksum per file."""

    root: Path
    similarity_files: int = 0
    geo_files: int = 0
    theme_files: int = 0
    checksums: dict[str, str] = field(default_factory=dict)

    def merge(self, other: "ExportManifest") -> "ExportManifest":
        if Path(other.root) != Path(self.root):
            raise ExportError(f"cannot merge manifests for {self.root} and {other.root}")
        merged = ExportManifest(
            root=self.root,
            similarity_files=self.similarity_files + other.similarity_files,
            geo_files=self.geo_files + other.geo_files,
            theme_files=self.theme_files + other.theme_files,
            checksums=dict(self.checksums),
        )
        merged.checksums.update(other.checksums)
        return merged


def verify_manifest(manifest: ExportManifest) -> None:
    """Check that every listed file exists, still matches its checksum, and parses as JSON."""
    for rel_path, digest in manifest.checksums.items():
        path = Path(manifest.root) / rel_path
        if not path.is_file():
            raise ExportError(f"manifest file missing: {rel_path}")
        data = path.read_bytes()
        if hashlib.sha256(data).hexdigest() != digest:
            raise ExportError(f"checksum mismatch: {rel_path}")
        json.loads(data.decode("utf-8"))


def write_manifest(manifest: ExportManifest, path: Path | None = None) -> Path:
    target = path if path is not None else Path(manifest.root) / MANIFEST_FILE
    payload = {
        "similarity_files": manifest.similarity_files,
        "geo_files": manifest.geo_files,
        "theme_files": manifest.theme_files,
        "checksums": manifest.checksums,
    }
    write_canonical_json(payload, target)
    return target


def neighbors_payload(graphs: Iterable[SimilarityGraph], photo_id: str) -> dict:
    """The `neighbors` object of the similarity file schema.

    A method key is present exactly when that graph has an entry for the
    photo; the record-detail API serves this same object.
    """
    payload: dict[str, list[dict]] = {}
    for graph in graphs:
        if photo_id in graph.edges:
            payload[graph.method] = [
                {"id": nb.photo_id, "score": round_score(nb.score)}
                for nb in graph.edges[photo_id]
            ]
    return payload


def similarity_file_path(root: Path, photo_id: str) -> Path:
    if not photo_id or photo_id in (".", "..") or "/" in photo_id or "\\" in photo_id:
        raise ExportError(f"photo id unsafe for a filename: {photo_id!r}")
    return Path(root) / SIMILAR_DIR / photo_id[:2] / f"{photo_id}.json"


def export_similarity(graphs: Sequence[SimilarityGraph], root: str | Path) -> ExportManifest:
    """Write one JSON file per photo plus `similar/meta.json` (method -> k).

    At most one graph per method is allowed. An unwritable root surfaces as
    the underlying OSError.
    """
    methods = [g.method for g in graphs]
    if len(set(methods)) != len(methods):
        raise ExportError(f"conflicting graphs: duplicate methods in {methods}")
    root = Path(root)
    manifest = ExportManifest(root=root)
    for photo_id in sorted({pid for g in graphs for pid in g.edges}):
        path = similarity_file_path(root, photo_id)
        payload = {"id": photo_id, "neighbors": neighbors_payload(graphs, photo_id)}
        digest = write_canonical_json(payload, path)
        manifest.checksums[path.relative_to(root).as_posix()] = digest
        manifest.similarity_files += 1
    meta = {"methods": {g.method: {"k": g.k} for g in graphs}}
    meta_path = Path(root) / SIMILAR_DIR / SIMILAR_META_FILE
    manifest.checksums[meta_path.relative_to(root).as_posix()] = write_canonical_json(
        meta, meta_path
    )
    return manifest


def load_similarity(root: str | Path) -> dict[str, SimilarityGraph]:
    """Rebuild graphs from an export directory; inverse of export_similarity."""
    root = Path(root)
    meta = json.loads((root / SIMILAR_DIR / SIMILAR_META_FILE).read_text(encoding="utf-8"))
    methods: dict[str, dict] = meta["methods"]
    edges: dict[str, dict[str, tuple[Neighbor, ...]]] = {m: {} for m in methods}
    for path in sorted((root / SIMILAR_DIR).glob("*/*.json")):
        doc = json.loads(path.read_text(encoding="utf-8"))
        photo_id = doc["id"]
        for method, items in doc["neighbors"].items():
            edges[method][photo_id] = tuple(
                Neighbor(photo_id=item["id"], score=float(item["score"])) for item in items
            )
    return {
        method: SimilarityGraph(method=method, k=int(info["k"]), edges=edges[method])
        for method, info in methods.items()
    }


def _transform_coords(node, scale: float, dx: float, dy: float):
    if isinstance(node, (list, tuple)):
        if (
            len(node) >= 2
            and isinstance(node[0], (int, float))
            and isinstance(node[1], (int, float))
        ):
            out = [scale * node[0] + dx, scale * node[1] + dy]
            out.extend(node[2:])
            return out
        return [_transform_coords(child, scale, dx, dy) for child in node]
    return node


def _transform_geometry(geometry: Mapping, scale: float, dx: float, dy: float) -> dict:
    out = dict(geometry)
    if "coordinates" in out:
        out["coordinates"] = _transform_coords(out["coordinates"], scale, dx, dy)
    return out


def export_geojson(index: FacetIndex, base: Mapping, filt: FilterState) -> dict:
    """Annotate base features with a `count` under the filter; reposition insets.

    County features are keyed by a `fips` property, state features by a
    `state` property; a feature carrying neither is a fatal validation error.
    Features the filter leaves empty keep count 0 so the choropleth can render
    them as blank rather than missing.
    """
    aggregates = index.query(filt).aggregates
    features_out = []
    for feature in base.get("features", []):
        props = dict(feature.get("properties") or {})
        if "fips" in props:
            fips = str(props["fips"])
            count = aggregates.county_counts.get(fips, 0)
            territory = INSET_FIPS_PREFIXES.get(fips[:2])
        elif "state" in props:
            count = aggregates.state_counts.get(props["state"], 0)
            territory = props["state"] if props["state"] in INSET_TRANSFORMS else None
        else:
            raise ExportError("feature missing its key property ('fips' or 'state')")
        props["count"] = count
        geometry = feature.get("geometry")
        if territory is not None and geometry is not None:
            geometry = _transform_geometry(geometry, *INSET_TRANSFORMS[territory])
        features_out.append({"type": "Feature", "properties": props, "geometry": geometry})
    return {"type": "FeatureCollection", "features": features_out}


def theme_tree_payload(tree: ThemeTree) -> dict:
    def node(n: ThemeNode) -> dict:
        return {"name": n.name, "count": n.count, "children": [node(c) for c in n.children]}

    return {"children": [node(root) for root in tree.roots]}


def export_theme_tree(tree: ThemeTree, root: str | Path) -> ExportManifest:
    """Write the nested {name, count, children} hierarchy to themes.json."""
    root = Path(root)
    manifest = ExportManifest(root=root, theme_files=1)
    digest = write_canonical_json(theme_tree_payload(tree), root / THEMES_FILE)
    manifest.checksums[THEMES_FILE] = digest
    return manifest


def load_theme_tree(path: str | Path) -> ThemeTree:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))

    def node(d: Mapping) -> ThemeNode:
        return ThemeNode(
            name=d["name"],
            count=int(d["count"]),
            children=tuple(node(c) for c in d.get("children", ())),
        )

    return ThemeTree(roots=tuple(node(c) for c in doc.get("children", ())))
