"""Isomorphism-class corpora built by one-vertex extension.

Every graph on ``n + 1`` vertices arises from a graph on ``n`` vertices by
adding one vertex with some neighbourhood, so extending one representative
per class by every neighbourhood and deduplicating by canonical form yields
every class of the next order.  This is a simple (not orderly) generator
meant for orders where the labeled enumeration is out of reach.
"""

from __future__ import annotations

import numpy as np

from ..graphcore import Graph
from .canonical import CANONICAL_MAX_ORDER, canonical_codes, graph_from_mask


def _code_to_mask(code: int, nbits: int) -> int:
    # canonical codes put the first pair at the top bit; masks at bit 0
    return int(format(code, f"0{nbits}b")[::-1], 2) if nbits else 0


def graph_classes(n: int, connected_only: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class of order ``n``."""
    if not 1 <= n <= CANONICAL_MAX_ORDER:
        raise ValueError(f"need 1 <= n <= {CANONICAL_MAX_ORDER}")
    masks = np.zeros(1, dtype=np.int64)
    for k in range(1, n):
        shift = k * (k - 1) // 2
        ext = (masks[:, None] | (np.arange(1 << k, dtype=np.int64)[None, :] << shift)).ravel()
        codes = np.unique(canonical_codes(ext, k + 1))
        nbits = (k + 1) * k // 2
        masks = np.array([_code_to_mask(int(c), nbits) for c in codes], dtype=np.int64)
    graphs = [graph_from_mask(int(m), n) for m in masks]
    if connected_only:
        graphs = [g for g in graphs if g.is_connected()]
    return graphs
