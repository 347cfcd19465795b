import pytest

from archex.ingest import write_archive
from archex.visual_similarity import write_embeddings

from helpers import make_records


@pytest.fixture(scope="session")
def records_300():
    return make_records(300, seed=11)


@pytest.fixture(scope="session")
def api_inputs(tmp_path_factory):
    """Archive CSV + embeddings file for a 240-record snapshot, on disk."""
    import random

    root = tmp_path_factory.mktemp("api_inputs")
    records = make_records(240, seed=23)
    archive_path = root / "archive.csv"
    with open(archive_path, "w", encoding="utf-8", newline="") as fh:
        write_archive(records, fh)

    rng = random.Random(5)
    dim = 24
    rows = {r.id: [rng.gauss(0.0, 1.0) for _ in range(dim)] for r in records}
    embeddings_path = root / "embeddings.txt"
    write_embeddings(rows, dim, embeddings_path)
    return {"records": records, "archive": archive_path, "embeddings": embeddings_path}
