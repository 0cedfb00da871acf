"""Labeled enumeration of small connected graphs and the cached scan table."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

from .. import _kernels
from ..graphcore import Graph, GraphError
from .canonical import graph_from_mask

INTERNAL_MAX_ORDER = 7
CHUNK = 1 << 16


def _check_order(n: int) -> None:
    if not 2 <= n <= INTERNAL_MAX_ORDER:
        raise GraphError(
            f"internal enumeration supports 2 <= n <= {INTERNAL_MAX_ORDER}; "
            "use a graph6 corpus for larger orders"
        )


def mask_chunks(n: int) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    return [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


def _scan_chunk(n: int, lo: int, hi: int) -> np.ndarray:
    table = np.zeros((hi - lo, _kernels.N_COLS), dtype=np.int64)
    _kernels.scan_masks(lo, hi, n, table)
    return table


_TABLES: dict[int, np.ndarray] = {}


def internal_table(n: int, jobs: int = 1) -> np.ndarray:
    """Per-mask invariants for every labeled graph on ``n`` vertices.

    Row ``mask`` holds the columns named in :mod:`remoteness._kernels`.
    Chunks are scanned independently and concatenated in mask order, so the
    result does not depend on ``jobs``.
    """
    _check_order(n)
    if n in _TABLES:
        return _TABLES[n]
    chunks = mask_chunks(n)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda c: _scan_chunk(n, *c), chunks))
    else:
        parts = [_scan_chunk(n, lo, hi) for lo, hi in chunks]
    table = np.concatenate(parts)
    table.setflags(write=False)
    _TABLES[n] = table
    return table


def connected_masks(n: int) -> np.ndarray:
    table = internal_table(n)
    return np.flatnonzero(table[:, _kernels.CONNECTED])


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, once, in mask order."""
    _check_order(n)
    for mask in connected_masks(n):
        yield graph_from_mask(int(mask), n)


def count_connected_labeled(n: int) -> int:
    return int(internal_table(n)[:, _kernels.CONNECTED].sum())
