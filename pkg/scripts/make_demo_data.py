#!/usr/bin/env python3
"""Generate a synthetic demo archive: CSV metadata, embeddings, and geo bases.

The output directory is ready for the CLI:

    python scripts/make_demo_data.py --out demo --records 2000
    archex build --archive demo/archive.csv --embeddings demo/embeddings.txt \
        --geo demo/geo --out demo/export
    archex serve --archive demo/archive.csv --embeddings demo/embeddings.txt \
        --geo demo/geo --port 8000

Captions are drawn so that visually similar photos (nearby embedding
clusters) also share vocabulary, which makes the two recommendation strips
agree often enough to look plausible.
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

from archex.ingest import write_archive
from archex.records import PhotoRecord
from archex.visual_similarity import write_embeddings

STATE_COUNTIES = {
    "Texas": [("48029", "Bexar", -98.5, 29.4), ("48113", "Dallas", -96.8, 32.8),
              ("48201", "Harris", -95.4, 29.8), ("48453", "Travis", -97.8, 30.3)],
    "Iowa": [("19099", "Jasper", -93.1, 41.7), ("19153", "Polk", -93.6, 41.6)],
    "California": [("06037", "Los Angeles", -118.2, 34.1), ("06019", "Fresno", -119.8, 36.7)],
    "New York": [("36061", "New York", -74.0, 40.7), ("36029", "Erie", -78.8, 42.9)],
    "Georgia": [("13121", "Fulton", -84.4, 33.8)],
    "Ohio": [("39035", "Cuyahoga", -81.7, 41.5)],
    "Alaska": [("02020", "Anchorage", -149.9, 61.2)],
    "Hawaii": [("15003", "Honolulu", -157.9, 21.3)],
    "Puerto Rico": [("72127", "San Juan", -66.1, 18.4)],
}
PHOTOGRAPHERS = [
    "Russell Lee", "Dorothea Lange", "Gordon Parks", "Arthur Rothstein",
    "Marion Post Wolcott", "Walker Evans", "John Vachon", "Jack Delano",
]
THEMES = [
    ("The Land", "Farms", "Corn"), ("The Land", "Farms", "Wheat"),
    ("The Land", "Erosion"), ("Work", "Industry", "Steel"),
    ("Work", "Transportation"), ("People", "Children"),
    ("People", "Religion", "Churches"), ("War", "Homefront"),
]
# One vocabulary cluster per theme so captions and embeddings correlate.
THEME_WORDS = {
    ("The Land", "Farms", "Corn"): ["corn", "rows", "husking", "crib", "stalks", "hybrid"],
    ("The Land", "Farms", "Wheat"): ["wheat", "combine", "threshing", "grain", "stubble"],
    ("The Land", "Erosion"): ["gullies", "dust", "eroded", "terracing", "soil"],
    ("Work", "Industry", "Steel"): ["furnace", "mill", "ingots", "foundry", "smoke"],
    ("Work", "Transportation"): ["railroad", "freight", "depot", "highway", "trucks"],
    ("People", "Children"): ["children", "playing", "schoolyard", "lunch", "classroom"],
    ("People", "Religion", "Churches"): ["church", "congregation", "revival", "steeple", "hymn"],
    ("War", "Homefront"): ["bonds", "scrap", "rationing", "defense", "salvage"],
}
FILLER = ["shown", "view", "group", "small", "large", "several", "old", "new"]


def make_demo(out: Path, n: int, dim: int, seed: int) -> None:
    rng = random.Random(seed)
    states = sorted(STATE_COUNTIES)
    theme_centers = {
        theme: [rng.gauss(0.0, 1.0) for _ in range(dim)] for theme in THEMES
    }

    records: list[PhotoRecord] = []
    embeddings: dict[str, list[float]] = {}
    for i in range(n):
        photo_id = f"d{i:06d}"
        theme = rng.choice(THEMES)
        theme = theme[: rng.randint(1, len(theme))] if rng.random() < 0.9 else None
        state = county = county_name = None
        lat = lon = None
        if rng.random() < 0.85:
            state = rng.choice(states)
            if rng.random() < 0.85:
                county, county_name, clon, clat = rng.choice(STATE_COUNTIES[state])
                lat = round(clat + rng.uniform(-0.5, 0.5), 4)
                lon = round(clon + rng.uniform(-0.5, 0.5), 4)
        year = rng.randint(1935, 1944) if rng.random() < 0.9 else None
        month = rng.randint(1, 12) if year is not None and rng.random() < 0.8 else None
        caption = None
        full_theme = rng.choice(THEMES) if theme is None else next(
            t for t in THEMES if t[: len(theme)] == theme
        )
        if rng.random() < 0.55:
            words = rng.sample(THEME_WORDS[full_theme], rng.randint(2, 4))
            words += rng.sample(FILLER, rng.randint(1, 3))
            rng.shuffle(words)
            caption = " ".join(words).capitalize()
            if county_name is not None and rng.random() < 0.5:
                caption += f" near {county_name}, {state}"
        records.append(
            PhotoRecord(
                id=photo_id,
                image_url=f"https://demo.invalid/full/{photo_id}.jpg",
                thumb_url=f"https://demo.invalid/thumb/{photo_id}.jpg",
                caption=caption,
                photographer=rng.choice(PHOTOGRAPHERS) if rng.random() < 0.9 else None,
                year=year,
                month=month,
                state=state,
                county_fips=county,
                county_name=county_name,
                lat=lat,
                lon=lon,
                theme_path=theme,
            )
        )
        center = theme_centers[full_theme]
        embeddings[photo_id] = [c + rng.gauss(0.0, 0.35) for c in center]

    out.mkdir(parents=True, exist_ok=True)
    with open(out / "archive.csv", "w", encoding="utf-8", newline="") as fh:
        write_archive(records, fh)
    write_embeddings(embeddings, dim, out / "embeddings.txt")

    geo = out / "geo"
    geo.mkdir(exist_ok=True)
    county_features = []
    state_boxes: dict[str, list[float]] = {}
    for state, counties in STATE_COUNTIES.items():
        for fips, name, clon, clat in counties:
            ring = [
                [clon - 0.6, clat - 0.6], [clon + 0.6, clat - 0.6],
                [clon + 0.6, clat + 0.6], [clon - 0.6, clat + 0.6],
                [clon - 0.6, clat - 0.6],
            ]
            county_features.append(
                {
                    "type": "Feature",
                    "properties": {"fips": fips, "name": name},
                    "geometry": {"type": "Polygon", "coordinates": [ring]},
                }
            )
            box = state_boxes.setdefault(state, [clon, clat, clon, clat])
            box[0] = min(box[0], clon - 1.0)
            box[1] = min(box[1], clat - 1.0)
            box[2] = max(box[2], clon + 1.0)
            box[3] = max(box[3], clat + 1.0)
    state_features = [
        {
            "type": "Feature",
            "properties": {"state": state},
            "geometry": {
                "type": "Polygon",
                "coordinates": [[[x0, y0], [x1, y0], [x1, y1], [x0, y1], [x0, y0]]],
            },
        }
        for state, (x0, y0, x1, y1) in sorted(state_boxes.items())
    ]
    (geo / "counties.geojson").write_text(
        json.dumps({"type": "FeatureCollection", "features": county_features})
    )
    (geo / "states.geojson").write_text(
        json.dumps({"type": "FeatureCollection", "features": state_features})
    )
    captioned = sum(1 for r in records if r.caption)
    print(f"wrote {len(records)} records ({captioned} captioned) to {out}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("demo"))
    parser.add_argument("--records", type=int, default=2000)
    parser.add_argument("--dim", type=int, default=64)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    make_demo(args.out, args.records, args.dim, args.seed)


if __name__ == "__main__":
    main()
