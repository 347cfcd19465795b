"""Archive CSV parsing, validation, serialization, and the location gazetteer.

Rows violating any record invariant are rejected with a reason and recorded in
the IngestReport; parsing always continues past them. Only a bad header is
fatal. Ambiguous rows are rejected rather than repaired, so the report doubles
as the cleaning audit trail.
"""

from __future__ import annotations

import csv
import io
import re
from pathlib import Path
from typing import IO, Iterable

from .errors import FormatError
from .records import ARCHIVE_COLUMNS, YEAR_MAX, YEAR_MIN, Gazetteer, IngestReport, PhotoRecord

_FIPS_RE = re.compile(r"^[0-9]{5}$")


def open_text_source(source: IO[str] | str | Path) -> tuple[IO[str], bool]:
    """Return (stream, owned); str/Path arguments are opened as UTF-8 paths."""
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline=""), True
    return source, False


def _clean(cell: str) -> str | None:
    value = cell.strip()
    return value if value else None


def _canonical_name(value: str) -> str:
    # Collapse internal whitespace runs so "Russell  Lee" and "Russell Lee" agree.
    return " ".join(value.split())


def _validate_row(row: list[str]) -> tuple[PhotoRecord | None, str | None]:
    """Turn one CSV row into a PhotoRecord, or a rejection reason."""
    if len(row) != len(ARCHIVE_COLUMNS):
        return None, f"wrong number of fields: expected {len(ARCHIVE_COLUMNS)}, got {len(row)}"
    cells = dict(zip(ARCHIVE_COLUMNS, row))

    photo_id = _clean(cells["id"])
    if photo_id is None:
        return None, "missing id"

    caption = _clean(cells["caption"])
    photographer = _clean(cells["photographer"])
    if photographer is not None:
        photographer = _canonical_name(photographer)

    year_raw = _clean(cells["year"])
    month_raw = _clean(cells["month"])
    year = month = None
    if year_raw is not None:
        try:
            year = int(year_raw)
        except ValueError:
            return None, f"invalid year: {year_raw!r}"
        if not YEAR_MIN <= year <= YEAR_MAX:
            return None, f"year out of range: {year}"
    if month_raw is not None:
        if year is None:
            return None, "month without year"
        try:
            month = int(month_raw)
        except ValueError:
            return None, f"invalid month: {month_raw!r}"
        if not 1 <= month <= 12:
            return None, f"month out of range: {month}"

    state = _clean(cells["state"])
    if state is not None:
        state = _canonical_name(state)
    county_fips = _clean(cells["county_fips"])
    if county_fips is not None:
        if not _FIPS_RE.match(county_fips):
            return None, f"invalid county_fips: {county_fips!r}"
        if state is None:
            return None, "county_fips without state"
    county_name = _clean(cells["county_name"])
    if county_name is not None:
        county_name = _canonical_name(county_name)

    lat_raw = _clean(cells["lat"])
    lon_raw = _clean(cells["lon"])
    if (lat_raw is None) != (lon_raw is None):
        return None, "lat without lon" if lat_raw is not None else "lon without lat"
    lat = lon = None
    if lat_raw is not None:
        try:
            lat = float(lat_raw)
        except ValueError:
            return None, f"invalid lat: {lat_raw!r}"
        try:
            lon = float(lon_raw)
        except ValueError:
            return None, f"invalid lon: {lon_raw!r}"
        if not -90.0 <= lat <= 90.0:
            return None, f"lat out of range: {lat}"
        if not -180.0 <= lon <= 180.0:
            return None, f"lon out of range: {lon}"

    theme_raw = _clean(cells["theme_path"])
    theme_path = None
    if theme_raw is not None:
        parts = tuple(part.strip() for part in theme_raw.split("/"))
        if any(not part for part in parts):
            return None, f"empty theme node in {theme_raw!r}"
        theme_path = parts

    image_url = _clean(cells["image_url"])
    if image_url is None:
        return None, "missing image_url"
    thumb_url = _clean(cells["thumb_url"])
    if thumb_url is None:
        return None, "missing thumb_url"

    record = PhotoRecord(
        id=photo_id,
        image_url=image_url,
        thumb_url=thumb_url,
        caption=caption,
        photographer=photographer,
        year=year,
        month=month,
        state=state,
        county_fips=county_fips,
        county_name=county_name,
        lat=lat,
        lon=lon,
        theme_path=theme_path,
    )
    return record, None


def _record_has(record: PhotoRecord, column: str) -> bool:
    return getattr(record, column) is not None


def parse_archive(source: IO[str] | str | Path) -> tuple[list[PhotoRecord], IngestReport]:
    """Parse the archive CSV into validated PhotoRecords plus an ingest report.

    `source` is a filesystem path or an open text stream. Raises FormatError
    when the header row is not exactly ARCHIVE_COLUMNS; every per-row problem
    (including a duplicated id, which rejects the later row) is recorded in
    the report and parsing continues.
    """
    stream, owned = open_text_source(source)
    try:
        reader = csv.reader(stream)
        header = next(reader, None)
        if header is None:
            raise FormatError("empty archive: missing header row")
        if tuple(header) != ARCHIVE_COLUMNS:
            missing = [c for c in ARCHIVE_COLUMNS if c not in header]
            unknown = [c for c in header if c not in ARCHIVE_COLUMNS]
            raise FormatError(
                f"bad archive header: missing columns {missing}, unknown columns {unknown}"
            )

        records: list[PhotoRecord] = []
        report = IngestReport()
        seen_ids: set[str] = set()
        fill_counts = {column: 0 for column in ARCHIVE_COLUMNS}
        for row in reader:
            report.total_rows += 1
            line_number = reader.line_num
            record, reason = _validate_row(row)
            if record is None:
                report.rejected.append((line_number, reason))
                continue
            if record.id in seen_ids:
                report.rejected.append((line_number, "duplicate id"))
                continue
            seen_ids.add(record.id)
            records.append(record)
            for column in ARCHIVE_COLUMNS:
                if _record_has(record, column):
                    fill_counts[column] += 1

        report.accepted = len(records)
        report.field_fill_rates = {
            column: (fill_counts[column] / report.accepted if report.accepted else 0.0)
            for column in ARCHIVE_COLUMNS
        }
        return records, report
    finally:
        if owned:
            stream.close()


def write_archive(records: Iterable[PhotoRecord], stream: IO[str] | None = None) -> str | None:
    """Serialize records back to the archive CSV format.

    The output round-trips: parse_archive(write_archive(records)) yields an
    identical record list. Returns the CSV text when no stream is given.
    """
    target = stream if stream is not None else io.StringIO()
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(ARCHIVE_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.id,
                r.caption or "",
                r.photographer or "",
                "" if r.year is None else str(r.year),
                "" if r.month is None else str(r.month),
                r.state or "",
                r.county_fips or "",
                r.county_name or "",
                "" if r.lat is None else repr(r.lat),
                "" if r.lon is None else repr(r.lon),
                "" if r.theme_path is None else "/".join(r.theme_path),
                r.image_url,
                r.thumb_url,
            ]
        )
    if stream is None:
        return target.getvalue()
    return None


def build_gazetteer(records: Iterable[PhotoRecord]) -> Gazetteer:
    """Collect lowercase whitespace-split words (length >= 2) from state and county names.

    A pure function of the record set: input order never changes the result.
    """
    tokens: set[str] = set()
    for record in records:
        for value in (record.state, record.county_name):
            if value is None:
                continue
            for word in value.lower().split():
                if len(word) >= 2:
                    tokens.add(word)
    return Gazetteer(tokens=frozenset(tokens))
