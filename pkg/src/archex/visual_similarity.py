"""Embedding ingestion and the exact visual nearest-neighbor graph.

Embeddings are computed upstream by whatever image model feeds the archive;
this module only consumes the text interchange format, L2-normalizes every
vector, and links each photo to its k most cosine-similar peers by blocked
brute force. Exactness is the point: the graph is precomputed offline, so an
approximate index buys nothing and would break the oracle tests.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Mapping, Sequence

import numpy as np

from .errors import FormatError, ReferentialError
from .graphs import DEFAULT_K, METHOD_VISUAL, SCORE_TILE_CELLS, Neighbor, SimilarityGraph, top_k_neighbors
from .ingest import open_text_source
from .records import PhotoRecord


@dataclass(frozen=True)
class EmbeddingMatrix:
    """One unit-length row per embedded photo, sorted by photo id.

    `missing_ids` lists archive records that have no embedding row (they are
    legal — those photos simply get no visual neighbors).
    """

    ids: tuple[str, ...]
    vectors: np.ndarray
    dim: int
    normalized: bool
    missing_ids: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.ids)

    def row(self, photo_id: str) -> np.ndarray:
        pos = bisect_left(self.ids, photo_id)
        if pos == len(self.ids) or self.ids[pos] != photo_id:
            raise KeyError(photo_id)
        return self.vectors[pos]


def load_embeddings(
    source: IO[str] | str | Path, records: Iterable[PhotoRecord]
) -> EmbeddingMatrix:
    """Parse the embedding file and L2-normalize every row.

    Format: first line `<n> <dim>`, then n lines of
    `<photo_id> <v1> ... <v_dim>` (single-space separated decimal floats).
    Unknown photo ids are fatal ReferentialErrors; dimension mismatches,
    duplicate rows, non-finite components, and zero vectors are fatal
    FormatErrors.
    """
    known = {r.id for r in records}
    stream, owned = open_text_source(source)
    try:
        header = stream.readline()
        parts = header.split()
        if len(parts) != 2:
            raise FormatError(f"embedding header must be '<n> <dim>', got {header!r}")
        try:
            n, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"embedding header must be two integers, got {header!r}") from None
        if n < 0 or dim < 1:
            raise FormatError(f"bad embedding header values: n={n}, dim={dim}")

        rows: dict[str, np.ndarray] = {}
        for i in range(n):
            line = stream.readline()
            if not line:
                raise FormatError(f"expected {n} embedding rows, found {i}")
            fields = line.split()
            if len(fields) != dim + 1:
                raise FormatError(
                    f"embedding row {i + 1}: expected {dim} components, got {len(fields) - 1}"
                )
            photo_id = fields[0]
            if photo_id not in known:
                raise ReferentialError(f"embedding row for unknown photo id {photo_id!r}")
            if photo_id in rows:
                raise FormatError(f"duplicate embedding row for photo id {photo_id!r}")
            try:
                vector = np.array([float(x) for x in fields[1:]], dtype=np.float64)
            except ValueError:
                raise FormatError(f"embedding row {i + 1}: non-numeric component") from None
            if not np.isfinite(vector).all():
                raise FormatError(f"non-finite embedding component for photo id {photo_id!r}")
            norm = float(np.linalg.norm(vector))
            if norm == 0.0:
                raise FormatError(f"zero embedding vector for photo id {photo_id!r}")
            rows[photo_id] = vector / norm
        trailing = stream.readline()
        if trailing.strip():
            raise FormatError("trailing data after the declared embedding rows")
    finally:
        if owned:
            stream.close()

    ids = tuple(sorted(rows))
    vectors = (
        np.vstack([rows[photo_id] for photo_id in ids])
        if ids
        else np.empty((0, dim), dtype=np.float64)
    )
    missing = tuple(sorted(known - set(ids)))
    return EmbeddingMatrix(
        ids=ids, vectors=vectors, dim=dim, normalized=True, missing_ids=missing
    )


def write_embeddings(
    rows: Mapping[str, Sequence[float]], dim: int, target: IO[str] | str | Path
) -> None:
    """Write vectors in the embedding interchange format (ids in ascending order)."""
    stream, owned = (
        (open(target, "w", encoding="utf-8", newline="\n"), True)
        if isinstance(target, (str, Path))
        else (target, False)
    )
    try:
        stream.write(f"{len(rows)} {dim}\n")
        for photo_id in sorted(rows):
            vector = rows[photo_id]
            if len(vector) != dim:
                raise FormatError(
                    f"vector for {photo_id!r} has {len(vector)} components, expected {dim}"
                )
            stream.write(photo_id + " " + " ".join(repr(float(v)) for v in vector) + "\n")
    finally:
        if owned:
            stream.close()


def build_visual_graph(matrix: EmbeddingMatrix, k: int = DEFAULT_K) -> SimilarityGraph:
    """Exact top-k cosine neighbors (dot products of unit rows) for every embedded photo.

    Self-similarity is excluded, ties break by ascending id, and scores are
    clamped to [-1, 1]. An empty matrix yields a valid empty graph. Scoring is
    tiled over source rows; the output never depends on the tiling.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ids = matrix.ids
    n = len(ids)
    edges: dict[str, tuple[Neighbor, ...]] = {}
    if n:
        tile = max(1, SCORE_TILE_CELLS // n)
        for start in range(0, n, tile):
            scores = matrix.vectors[start : start + tile] @ matrix.vectors.T
            np.clip(scores, -1.0, 1.0, out=scores)
            for offset in range(scores.shape[0]):
                pos = start + offset
                edges[ids[pos]] = top_k_neighbors(scores[offset], ids, pos, k)
    return SimilarityGraph(method=METHOD_VISUAL, k=k, edges=edges)
