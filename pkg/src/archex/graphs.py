"""Neighbor-graph primitives shared by the caption and visual recommenders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

METHOD_TEXT = "text"
METHOD_VISUAL = "visual"

# Neighbor strip length in the record view; one value for both methods so the
# UI strips line up.
DEFAULT_K = 12

# Dense similarity cells held per scoring tile (~32 MB of float64).
SCORE_TILE_CELLS = 4_000_000


@dataclass(frozen=True)
class Neighbor:
    photo_id: str
    score: float


@dataclass(frozen=True)
class SimilarityGraph:
    """Per-photo neighbor lists: edges map photo_id -> Neighbors sorted by (-score, id).

    `k` is the requested list length; lists are shorter when fewer other
    photos exist. Treat instances as immutable once built.
    """

    method: str
    k: int
    edges: dict[str, tuple[Neighbor, ...]]


def top_k_neighbors(
    scores: np.ndarray, ids: Sequence[str], self_pos: int, k: int
) -> tuple[Neighbor, ...]:
    """Exact k best entries of one dense score row, self excluded.

    Ties are broken by ascending id; `ids` must already be in ascending order
    so that position order doubles as the tie break. Boundary ties are handled
    exactly: everything scoring at or above the k-th value is sorted before
    truncation, so the result never depends on argpartition's internal order.
    """
    n = int(scores.shape[0])
    has_self = 0 <= self_pos < n
    limit = min(k, n - (1 if has_self else 0))
    if limit <= 0:
        return ()
    masked = scores.astype(np.float64, copy=True)
    if has_self:
        masked[self_pos] = -np.inf
    take = min(k, n - 1) if has_self else min(k, n)
    if take >= n:
        candidates = range(n)
    else:
        top = np.argpartition(-masked, take - 1)[:take]
        threshold = masked[top].min()
        candidates = np.nonzero(masked >= threshold)[0].tolist()
    order = sorted(candidates, key=lambda pos: (-masked[pos], pos))
    return tuple(
        Neighbor(photo_id=ids[pos], score=float(scores[pos]))
        for pos in order[:limit]
        if pos != self_pos
    )
