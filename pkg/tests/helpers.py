"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's code paths: filtering is a
linear scan with plain predicates, kNN is a per-row dense dot product with a
Python sort. They define what the engine must reproduce.
"""

from __future__ import annotations

import math
import random
from typing import Sequence

import numpy as np

from archex.facets import FilterState
from archex.records import PhotoRecord

STATE_COUNTIES: dict[str, list[tuple[str, str]]] = {
    "Texas": [("48029", "Bexar"), ("48113", "Dallas"), ("48201", "Harris"), ("48453", "Travis")],
    "Iowa": [("19099", "Jasper"), ("19153", "Polk"), ("19013", "Black Hawk")],
    "California": [("06037", "Los Angeles"), ("06075", "San Francisco"), ("06019", "Fresno")],
    "New York": [("36061", "New York"), ("36047", "Kings"), ("36029", "Erie")],
    "Georgia": [("13121", "Fulton"), ("13051", "Chatham")],
    "Ohio": [("39035", "Cuyahoga"), ("39049", "Franklin")],
    "Alaska": [("02020", "Anchorage")],
    "Hawaii": [("15003", "Honolulu")],
    "Puerto Rico": [("72127", "San Juan")],
}
STATES = sorted(STATE_COUNTIES)

PHOTOGRAPHERS = [
    "Russell Lee",
    "Dorothea Lange",
    "Gordon Parks",
    "Arthur Rothstein",
    "Marion Post Wolcott",
    "Walker Evans",
    "John Vachon",
    "Jack Delano",
]

THEME_PATHS: list[tuple[str, ...]] = [
    ("The Land", "Farms", "Corn"),
    ("The Land", "Farms", "Wheat"),
    ("The Land", "Erosion"),
    ("Work", "Industry", "Steel"),
    ("Work", "Transportation"),
    ("People", "Children"),
    ("People", "Religion", "Churches"),
    ("War", "Homefront"),
]

CAPTION_WORDS = [
    "orchard", "barn", "cotton", "tractor", "wheat", "corn", "harvest",
    "workers", "children", "school", "church", "store", "street", "migrant",
    "family", "camp", "cabin", "mill", "cattle", "horses", "wagon", "road",
    "dust", "storm", "river", "bridge", "station", "railroad", "engine",
    "depot", "market", "tenant", "house", "porch", "kitchen", "garden",
    "fence", "windmill", "silo", "grain", "elevator", "picking", "plowing",
    "planting", "apples", "general", "filling", "relief", "clinic", "fair",
]


def make_records(n: int, seed: int = 7) -> list[PhotoRecord]:
    """Deterministic synthetic archive with realistic field sparsity."""
    rng = random.Random(seed)
    records = []
    for i in range(n):
        photo_id = f"{rng.choice('abcdef')}{i:06d}"
        state = county_fips = county_name = None
        lat = lon = None
        if rng.random() < 0.75:
            state = rng.choice(STATES)
            if rng.random() < 0.8:
                county_fips, county_name = rng.choice(STATE_COUNTIES[state])
            if rng.random() < 0.6:
                lat = round(rng.uniform(18.0, 65.0), 4)
                lon = round(rng.uniform(-160.0, -65.0), 4)
        year = rng.randint(1935, 1943) if rng.random() < 0.8 else None
        month = rng.randint(1, 12) if year is not None and rng.random() < 0.7 else None
        photographer = rng.choice(PHOTOGRAPHERS) if rng.random() < 0.85 else None
        theme = rng.choice(THEME_PATHS) if rng.random() < 0.7 else None
        if theme is not None:
            theme = theme[: rng.randint(1, len(theme))]
        caption = None
        if rng.random() < 0.5:
            words = rng.sample(CAPTION_WORDS, rng.randint(1, 8))
            caption = " ".join(words).capitalize()
            if state is not None and rng.random() < 0.4:
                place = county_name or state
                caption += f" near {place}, {state}"
        records.append(
            PhotoRecord(
                id=photo_id,
                image_url=f"https://img.test/{photo_id}.jpg",
                thumb_url=f"https://img.test/{photo_id}_t.jpg",
                caption=caption,
                photographer=photographer,
                year=year,
                month=month,
                state=state,
                county_fips=county_fips,
                county_name=county_name,
                lat=lat,
                lon=lon,
                theme_path=theme,
            )
        )
    return records


def random_filter(rng: random.Random, records: Sequence[PhotoRecord]) -> FilterState:
    """A random valid FilterState; county choices stay consistent with their state."""
    state = county = None
    if rng.random() < 0.45:
        state = rng.choice(STATES + ["Nowhere"])
        with_county = [
            r for r in records if r.state == state and r.county_fips is not None
        ]
        if with_county and rng.random() < 0.4:
            picked = rng.choice(with_county)
            county = picked.county_fips
    photographers: frozenset[str] = frozenset()
    if rng.random() < 0.4:
        photographers = frozenset(
            rng.sample(PHOTOGRAPHERS + ["Unknown Name"], rng.randint(1, 3))
        )
    year_start = year_end = None
    if rng.random() < 0.45:
        year_start = rng.randint(1929, 1949)
        year_end = min(1949, year_start + rng.randint(0, 8))
        which = rng.random()
        if which < 0.25:
            year_end = None
        elif which < 0.5:
            year_start, year_end = None, year_end
    theme_prefix = None
    if rng.random() < 0.35:
        path = rng.choice(THEME_PATHS)
        theme_prefix = path[: rng.randint(1, len(path))]
    return FilterState(
        state=state,
        county_fips=county,
        photographers=photographers,
        year_start=year_start,
        year_end=year_end,
        theme_prefix=theme_prefix,
        page=rng.randint(0, 3),
        page_size=rng.choice([7, 13, 60, 200]),
    )


def matches_filter(r: PhotoRecord, f: FilterState) -> bool:
    """Oracle predicate: plain restatement of the matching rules."""
    if f.state is not None and r.state != f.state:
        return False
    if f.county_fips is not None and r.county_fips != f.county_fips:
        return False
    if f.photographers and (r.photographer is None or r.photographer not in f.photographers):
        return False
    if f.year_start is not None or f.year_end is not None:
        if r.year is None:
            return False
        if f.year_start is not None and r.year < f.year_start:
            return False
        if f.year_end is not None and r.year > f.year_end:
            return False
    if f.theme_prefix is not None:
        if r.theme_path is None or len(r.theme_path) < len(f.theme_prefix):
            return False
        if r.theme_path[: len(f.theme_prefix)] != tuple(f.theme_prefix):
            return False
    return True


def brute_force_query(records: Sequence[PhotoRecord], f: FilterState) -> dict:
    """Linear-scan oracle for query(): totals, aggregate maps, page ids."""
    subset = sorted((r for r in records if matches_filter(r, f)), key=lambda r: r.id)
    county: dict[str, int] = {}
    state: dict[str, int] = {}
    timeline: dict[tuple[str, int], int] = {}
    themes: dict[tuple[str, ...], int] = {}
    for r in subset:
        if r.county_fips is not None:
            county[r.county_fips] = county.get(r.county_fips, 0) + 1
        if r.state is not None:
            state[r.state] = state.get(r.state, 0) + 1
        if r.photographer is not None and r.year is not None:
            cell = (r.photographer, r.year)
            timeline[cell] = timeline.get(cell, 0) + 1
        if r.theme_path is not None:
            for depth in range(1, len(r.theme_path) + 1):
                prefix = r.theme_path[:depth]
                themes[prefix] = themes.get(prefix, 0) + 1
    total = len(subset)
    total_pages = math.ceil(total / f.page_size) if total else 0
    page = subset[f.page * f.page_size : (f.page + 1) * f.page_size]
    return {
        "total": total,
        "county_counts": county,
        "state_counts": state,
        "timeline": timeline,
        "theme_counts": themes,
        "page_ids": [r.id for r in page],
        "total_pages": total_pages,
    }


def assert_query_matches_oracle(result, oracle: dict) -> None:
    assert result.aggregates.total == oracle["total"]
    assert result.aggregates.county_counts == oracle["county_counts"]
    assert result.aggregates.state_counts == oracle["state_counts"]
    assert result.aggregates.timeline == oracle["timeline"]
    assert result.aggregates.theme_counts == oracle["theme_counts"]
    assert [r.id for r in result.page_records] == oracle["page_ids"]
    assert result.total_pages == oracle["total_pages"]


def brute_force_knn(
    ids: Sequence[str], vectors: np.ndarray, k: int, clamp: bool = True
) -> dict[str, list[tuple[str, float]]]:
    """Exhaustive O(n^2) neighbor oracle: per-row dot products, Python sort."""
    out: dict[str, list[tuple[str, float]]] = {}
    n = len(ids)
    for i in range(n):
        sims = vectors @ vectors[i]
        scored = []
        for j in range(n):
            if j == i:
                continue
            score = float(sims[j])
            if clamp:
                score = min(1.0, max(-1.0, score))
            scored.append((score, ids[j]))
        scored.sort(key=lambda t: (-t[0], t[1]))
        out[ids[i]] = [(photo_id, score) for score, photo_id in scored[:k]]
    return out


def make_captions(n: int, seed: int = 13) -> dict[str, list[str]]:
    """Synthetic pre-tokenized caption corpus (some too short to be included)."""
    rng = random.Random(seed)
    captions: dict[str, list[str]] = {}
    for i in range(n):
        photo_id = f"c{i:05d}"
        length = rng.choice([1, 2] + list(range(3, 12)))
        captions[photo_id] = [rng.choice(CAPTION_WORDS) for _ in range(length)]
    return captions
