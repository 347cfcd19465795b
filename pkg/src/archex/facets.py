"""Immutable multi-facet index: one filter state in, simultaneous aggregates out.

Matching is a conjunction over the facets present in the filter; the
photographer set is a disjunction within its facet. A record missing a facet
value cannot match a filter that constrains that facet (so records without a
year match only when no year range is set), but it still counts toward the
total when it matches — it is simply absent from that facet's aggregate map.
Aggregates are always computed under the complete filter.

Result ordering is ascending photo id, which makes pagination a partition of
the match set and keeps every query deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidFilterError
from .records import PhotoRecord

DEFAULT_PAGE_SIZE = 60  # thumbnails per result page


@dataclass(frozen=True)
class FilterState:
    """The single shared selection driving every linked view."""

    state: str | None = None
    county_fips: str | None = None
    photographers: frozenset[str] = frozenset()
    year_start: int | None = None
    year_end: int | None = None
    theme_prefix: tuple[str, ...] | None = None
    page: int = 0
    page_size: int = DEFAULT_PAGE_SIZE

    def validate(self) -> None:
        """Raise InvalidFilterError on any invariant violation."""
        if self.page < 0:
            raise InvalidFilterError(f"page must be >= 0, got {self.page}")
        if self.page_size < 1:
            raise InvalidFilterError(f"page_size must be >= 1, got {self.page_size}")
        if self.county_fips is not None and self.state is None:
            raise InvalidFilterError("county_fips filter requires a state")
        if (
            self.year_start is not None
            and self.year_end is not None
            and self.year_start > self.year_end
        ):
            raise InvalidFilterError(
                f"year_start {self.year_start} > year_end {self.year_end}"
            )
        if self.theme_prefix is not None:
            if len(self.theme_prefix) == 0 or any(not name for name in self.theme_prefix):
                raise InvalidFilterError(f"malformed theme prefix: {self.theme_prefix!r}")

    @property
    def has_year_range(self) -> bool:
        return self.year_start is not None or self.year_end is not None


@dataclass(frozen=True)
class AggregateSet:
    """Per-filter counts for the map, timeline, and theme views.

    Records missing a facet value appear in `total` but not in that facet's
    map; every map therefore sums to at most `total`. `theme_counts` counts a
    record once per prefix of its theme path.
    """

    total: int
    county_counts: dict[str, int]
    state_counts: dict[str, int]
    timeline: dict[tuple[str, int], int]
    theme_counts: dict[tuple[str, ...], int]


@dataclass(frozen=True)
class QueryResult:
    aggregates: AggregateSet
    page_records: tuple[PhotoRecord, ...]
    page: int
    total_pages: int


@dataclass(frozen=True)
class ThemeNode:
    name: str
    count: int
    children: tuple["ThemeNode", ...] = ()


@dataclass(frozen=True)
class ThemeTree:
    """Hierarchical theme classification with per-node record counts."""

    roots: tuple[ThemeNode, ...] = ()


class FacetIndex:
    """Inverted per-facet posting sets over records sorted by id.

    Immutable once built; any number of threads may query it concurrently.
    """

    def __init__(self, records: Iterable[PhotoRecord]) -> None:
        ordered = sorted(records, key=lambda r: r.id)
        if len({r.id for r in ordered}) != len(ordered):
            raise ValueError("record ids must be unique")
        self._records: tuple[PhotoRecord, ...] = tuple(ordered)
        self._all: frozenset[int] = frozenset(range(len(ordered)))

        by_state: dict[str, set[int]] = {}
        by_county: dict[str, set[int]] = {}
        county_states: dict[str, set[str]] = {}
        by_photographer: dict[str, set[int]] = {}
        by_year: dict[int, set[int]] = {}
        by_theme: dict[tuple[str, ...], set[int]] = {}
        for pos, r in enumerate(ordered):
            if r.state is not None:
                by_state.setdefault(r.state, set()).add(pos)
            if r.county_fips is not None:
                by_county.setdefault(r.county_fips, set()).add(pos)
                county_states.setdefault(r.county_fips, set()).add(r.state)
            if r.photographer is not None:
                by_photographer.setdefault(r.photographer, set()).add(pos)
            if r.year is not None:
                by_year.setdefault(r.year, set()).add(pos)
            if r.theme_path is not None:
                for depth in range(1, len(r.theme_path) + 1):
                    by_theme.setdefault(r.theme_path[:depth], set()).add(pos)

        self._by_state = {k: frozenset(v) for k, v in by_state.items()}
        self._by_county = {k: frozenset(v) for k, v in by_county.items()}
        self._county_states = {k: frozenset(v) for k, v in county_states.items()}
        self._by_photographer = {k: frozenset(v) for k, v in by_photographer.items()}
        self._by_year = {k: frozenset(v) for k, v in by_year.items()}
        self._by_theme = {k: frozenset(v) for k, v in by_theme.items()}
        # Children of each node path (and of the virtual root ()), name-sorted,
        # so the theme tree can retain zero-count nodes under any filter.
        children: dict[tuple[str, ...], set[tuple[str, ...]]] = {}
        for path in by_theme:
            children.setdefault(path[:-1], set()).add(path)
        self._theme_children = {
            parent: tuple(sorted(paths)) for parent, paths in children.items()
        }

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[PhotoRecord]:
        return iter(self._records)

    @property
    def records(self) -> tuple[PhotoRecord, ...]:
        return self._records

    def record(self, photo_id: str) -> PhotoRecord | None:
        # Binary search over the id-sorted record tuple.
        lo, hi = 0, len(self._records)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._records[mid].id < photo_id:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self._records) and self._records[lo].id == photo_id:
            return self._records[lo]
        return None

    def _match_positions(self, filt: FilterState) -> list[int]:
        candidates = self._all
        if filt.state is not None:
            candidates &= self._by_state.get(filt.state, frozenset())
        if filt.county_fips is not None:
            known_states = self._county_states.get(filt.county_fips)
            if known_states is not None and filt.state not in known_states:
                raise InvalidFilterError(
                    f"county_fips {filt.county_fips} is not in state {filt.state!r}"
                )
            candidates &= self._by_county.get(filt.county_fips, frozenset())
        if filt.photographers:
            hits: set[int] = set()
            for name in filt.photographers:
                hits |= self._by_photographer.get(name, frozenset())
            candidates &= hits
        if filt.has_year_range:
            hits = set()
            for year, posting in self._by_year.items():
                if filt.year_start is not None and year < filt.year_start:
                    continue
                if filt.year_end is not None and year > filt.year_end:
                    continue
                hits |= posting
            candidates &= hits
        if filt.theme_prefix is not None:
            candidates &= self._by_theme.get(tuple(filt.theme_prefix), frozenset())
        return sorted(candidates)

    def _aggregate(self, matched: Sequence[int]) -> AggregateSet:
        county: dict[str, int] = {}
        state: dict[str, int] = {}
        timeline: dict[tuple[str, int], int] = {}
        themes: dict[tuple[str, ...], int] = {}
        for pos in matched:
            r = self._records[pos]
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
        return AggregateSet(
            total=len(matched),
            county_counts=dict(sorted(county.items())),
            state_counts=dict(sorted(state.items())),
            timeline=dict(sorted(timeline.items())),
            theme_counts=dict(sorted(themes.items())),
        )

    def query(self, filt: FilterState) -> QueryResult:
        """Aggregates plus one page of matching records under the filter.

        Results are identical to a brute-force scan of the record list. Raises
        InvalidFilterError for invariant violations and for a state/county pair
        the archive knows to be inconsistent (never reported as an empty
        result).
        """
        filt.validate()
        matched = self._match_positions(filt)
        aggregates = self._aggregate(matched)
        total = len(matched)
        total_pages = math.ceil(total / filt.page_size) if total else 0
        start = filt.page * filt.page_size
        page_records = tuple(
            self._records[pos] for pos in matched[start : start + filt.page_size]
        )
        return QueryResult(
            aggregates=aggregates,
            page_records=page_records,
            page=filt.page,
            total_pages=total_pages,
        )

    def theme_tree(self, filt: FilterState) -> ThemeTree:
        """Counts for every archive theme node under the filter.

        Nodes the filter excludes entirely are retained with count 0 so the
        treemap can render them as empty.
        """
        filt.validate()
        matched = self._match_positions(filt)
        counts: dict[tuple[str, ...], int] = {}
        for pos in matched:
            r = self._records[pos]
            if r.theme_path is not None:
                for depth in range(1, len(r.theme_path) + 1):
                    prefix = r.theme_path[:depth]
                    counts[prefix] = counts.get(prefix, 0) + 1

        def build(path: tuple[str, ...]) -> ThemeNode:
            return ThemeNode(
                name=path[-1],
                count=counts.get(path, 0),
                children=tuple(build(c) for c in self._theme_children.get(path, ())),
            )

        roots = tuple(build(path) for path in self._theme_children.get((), ()))
        return ThemeTree(roots=roots)


def build_index(records: Iterable[PhotoRecord]) -> FacetIndex:
    """Build the immutable facet index; an empty record list is a valid empty index."""
    return FacetIndex(records)
