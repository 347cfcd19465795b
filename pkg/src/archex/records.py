"""Canonical record types for one archive snapshot.

The archive CSV schema is fixed (ARCHIVE_COLUMNS, in column order); an empty
cell means the field is absent. All validation lives in `ingest`, which only
constructs PhotoRecord instances that satisfy the invariants below.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ARCHIVE_COLUMNS: tuple[str, ...] = (
    "id",
    "caption",
    "photographer",
    "year",
    "month",
    "state",
    "county_fips",
    "county_name",
    "lat",
    "lon",
    "theme_path",
    "image_url",
    "thumb_url",
)

# Documentary era covered by the collection, with a one-year margin on each
# side; years outside this window are treated as data errors, not outliers.
YEAR_MIN = 1929
YEAR_MAX = 1949


@dataclass(frozen=True)
class RawRecord:
    """One unvalidated CSV row: its physical line number and cells keyed by column."""

    line_number: int
    cells: dict[str, str]


@dataclass(frozen=True)
class PhotoRecord:
    """One archival photograph after validation.

    Invariants (enforced by `ingest.parse_archive`): non-empty unique id;
    month implies year; county_fips implies state; lat present iff lon
    present; theme_path, when present, is non-empty with no empty node names.
    """

    id: str
    image_url: str
    thumb_url: str
    caption: str | None = None
    photographer: str | None = None
    year: int | None = None
    month: int | None = None
    state: str | None = None
    county_fips: str | None = None
    county_name: str | None = None
    lat: float | None = None
    lon: float | None = None
    theme_path: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Gazetteer:
    """Lowercase place-name word tokens drawn from the archive's own location fields."""

    tokens: frozenset[str] = frozenset()

    def __contains__(self, token: str) -> bool:
        return token in self.tokens

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass
class IngestReport:
    """Audit trail of one parse: every input row is accepted or rejected with a reason.

    `field_fill_rates` is computed over accepted rows only; with zero accepted
    rows every rate is 0.0.
    """

    total_rows: int = 0
    accepted: int = 0
    rejected: list[tuple[int, str]] = field(default_factory=list)
    field_fill_rates: dict[str, float] = field(default_factory=dict)
