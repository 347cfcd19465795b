"""Archive exploration engine: faceted queries plus precomputed recommendation graphs.

Pipeline: parse archive CSV -> facet index -> TF-IDF caption graph and visual
embedding kNN graph -> static export / query API.
"""

from .errors import (
    ArchexError,
    ExportError,
    FormatError,
    InvalidFilterError,
    ReferentialError,
)
from .export import (
    ExportManifest,
    export_geojson,
    export_similarity,
    export_theme_tree,
    load_similarity,
    load_theme_tree,
)
from .facets import (
    DEFAULT_PAGE_SIZE,
    AggregateSet,
    FacetIndex,
    FilterState,
    QueryResult,
    ThemeNode,
    ThemeTree,
    build_index,
)
from .graphs import DEFAULT_K, METHOD_TEXT, METHOD_VISUAL, Neighbor, SimilarityGraph
from .ingest import build_gazetteer, parse_archive, write_archive
from .records import ARCHIVE_COLUMNS, Gazetteer, IngestReport, PhotoRecord, RawRecord
from .server import Snapshot, build_snapshot, create_app
from .text_similarity import (
    MIN_TOKENS,
    TfidfModel,
    build_text_graph,
    build_tfidf,
    tokenize_caption,
    tokenize_captions,
)
from .visual_similarity import (
    EmbeddingMatrix,
    build_visual_graph,
    load_embeddings,
    write_embeddings,
)

__version__ = "0.1.0"
