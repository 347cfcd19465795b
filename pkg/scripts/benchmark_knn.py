#!/usr/bin/env python3
"""Time the exact kNN graph build at a chosen scale.

    python scripts/benchmark_knn.py --n 10000 --dim 128 --k 12

The build is blocked brute force; at archive scale (~170k rows) this runs
offline, so the interesting number is rows/second, not latency.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from archex.visual_similarity import EmbeddingMatrix, build_visual_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--dim", type=int, default=128)
    parser.add_argument("--k", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    raw = rng.normal(size=(args.n, args.dim))
    unit = raw / np.linalg.norm(raw, axis=1, keepdims=True)
    matrix = EmbeddingMatrix(
        ids=tuple(f"b{i:07d}" for i in range(args.n)),
        vectors=unit,
        dim=args.dim,
        normalized=True,
        missing_ids=(),
    )

    started = time.perf_counter()
    graph = build_visual_graph(matrix, args.k)
    elapsed = time.perf_counter() - started
    assert len(graph.edges) == args.n
    print(
        f"n={args.n} dim={args.dim} k={args.k}: {elapsed:.2f}s "
        f"({args.n / elapsed:,.0f} rows/s)"
    )


if __name__ == "__main__":
    main()
