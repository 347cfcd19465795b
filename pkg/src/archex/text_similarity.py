"""Caption tokenization, TF-IDF vectorization, and the text recommendation graph.

Captions are lowercased and split on runs of non-alphanumeric characters;
stopwords, place-name (gazetteer) tokens, single characters, and pure-digit
tokens are dropped. Captions keeping fewer than MIN_TOKENS tokens are too
short to be useful and are left out of the model entirely, so uncaptioned and
thinly captioned photos simply have no entry in the text graph.

Term weights are raw in-document counts scaled by a smoothed idf,
ln((1 + N) / (1 + df)) + 1, and every document vector is L2-normalized, so
cosine similarity reduces to a sparse dot product.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy import sparse

from .graphs import DEFAULT_K, METHOD_TEXT, SCORE_TILE_CELLS, Neighbor, SimilarityGraph, top_k_neighbors
from .records import Gazetteer, PhotoRecord
from .stopwords import STOPWORDS

# Captions keeping fewer surviving tokens than this are excluded from the model.
MIN_TOKENS = 3

_TOKEN_SPLIT = re.compile(r"[\W_]+")


def tokenize_caption(text: str, gazetteer: Gazetteer) -> list[str]:
    """Filtered lowercase tokens of one caption, original order preserved."""
    tokens: list[str] = []
    for token in _TOKEN_SPLIT.split(text.lower()):
        if len(token) < 2 or token.isdigit():
            continue
        if token in STOPWORDS or token in gazetteer:
            continue
        tokens.append(token)
    return tokens


def tokenize_captions(
    records: Iterable[PhotoRecord], gazetteer: Gazetteer
) -> dict[str, list[str]]:
    """Token lists for every captioned record, keyed by photo id."""
    return {
        r.id: tokenize_caption(r.caption, gazetteer)
        for r in records
        if r.caption is not None
    }


@dataclass(frozen=True)
class TfidfModel:
    """Sparse L2-normalized tf-idf vectors over the included captions.

    Rows of `matrix` align with `doc_ids` (ascending photo ids); `vocabulary`
    maps each term to its column index and document frequency.
    """

    doc_ids: tuple[str, ...]
    vocabulary: dict[str, tuple[int, int]]
    matrix: sparse.csr_matrix

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    def row_of(self, photo_id: str) -> int:
        lo, hi = 0, len(self.doc_ids)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.doc_ids[mid] < photo_id:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.doc_ids) or self.doc_ids[lo] != photo_id:
            raise KeyError(photo_id)
        return lo

    def doc_vector(self, photo_id: str) -> sparse.csr_matrix:
        return self.matrix.getrow(self.row_of(photo_id))

    def cosine(self, photo_id_a: str, photo_id_b: str) -> float:
        """Cosine similarity between two included captions (vectors are unit length)."""
        a = self.doc_vector(photo_id_a)
        b = self.doc_vector(photo_id_b)
        return float((a @ b.T).toarray()[0, 0])


def build_tfidf(captions: Mapping[str, Sequence[str]]) -> TfidfModel:
    """Vectorize pre-filtered token lists; captions with < MIN_TOKENS tokens are skipped.

    Zero included captions produce a valid empty model.
    """
    included = sorted(
        (photo_id, tuple(tokens))
        for photo_id, tokens in captions.items()
        if len(tokens) >= MIN_TOKENS
    )
    doc_ids = tuple(photo_id for photo_id, _ in included)
    n_docs = len(doc_ids)

    df: dict[str, int] = {}
    for _, tokens in included:
        for term in set(tokens):
            df[term] = df.get(term, 0) + 1
    vocabulary = {term: (column, df[term]) for column, term in enumerate(sorted(df))}

    idf = np.empty(len(vocabulary), dtype=np.float64)
    for term, (column, term_df) in vocabulary.items():
        idf[column] = math.log((1 + n_docs) / (1 + term_df)) + 1.0

    data: list[float] = []
    indices: list[int] = []
    indptr = [0]
    for _, tokens in included:
        counts = Counter(tokens)
        entries = sorted((vocabulary[term][0], count) for term, count in counts.items())
        weights = [count * idf[column] for column, count in entries]
        norm = math.sqrt(sum(w * w for w in weights))
        data.extend(w / norm for w in weights)
        indices.extend(column for column, _ in entries)
        indptr.append(len(indices))

    matrix = sparse.csr_matrix(
        (
            np.asarray(data, dtype=np.float64),
            np.asarray(indices, dtype=np.int64),
            np.asarray(indptr, dtype=np.int64),
        ),
        shape=(n_docs, len(vocabulary)),
    )
    return TfidfModel(doc_ids=doc_ids, vocabulary=vocabulary, matrix=matrix)


def build_text_graph(model: TfidfModel, k: int = DEFAULT_K) -> SimilarityGraph:
    """Top-k cosine neighbors for every caption included in the model.

    Every included photo gets an edge entry (possibly empty when it is the
    only document); excluded photos get none. Scoring is tiled over source
    rows; tiling never changes the result.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ids = model.doc_ids
    n = len(ids)
    edges: dict[str, tuple[Neighbor, ...]] = {}
    if n:
        tile = max(1, SCORE_TILE_CELLS // n)
        for start in range(0, n, tile):
            block = model.matrix[start : start + tile] @ model.matrix.T
            scores = np.asarray(block.todense())
            for offset in range(scores.shape[0]):
                pos = start + offset
                edges[ids[pos]] = top_k_neighbors(scores[offset], ids, pos, k)
    return SimilarityGraph(method=METHOD_TEXT, k=k, edges=edges)
