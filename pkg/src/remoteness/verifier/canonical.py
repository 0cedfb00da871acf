"""Canonical forms and isomorphism for small graphs.

Vertices are first ordered by their distance profile (how many vertices lie
at each distance, plus the unreachable count).  The canonical form is the
lexicographically smallest graph6 over all orderings that respect that
partition.  The compiled route in :mod:`remoteness._kernels` implements the
same rule for bulk witness deduplication.
"""

from __future__ import annotations

from itertools import permutations, product

import numpy as np

from .. import _kernels
from ..graphcore import Graph, GraphError, _bits

CANONICAL_MAX_ORDER = 10


def graph_mask(g: Graph) -> int:
    """Edge mask in graph6 pair order, pair ``k`` at bit ``k``."""
    mask = k = 0
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            if (rj >> i) & 1:
                mask |= 1 << k
            k += 1
    return mask


def graph_from_mask(mask: int, n: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def code_to_graph6(code: int, n: int) -> bytes:
    """graph6 bytes from a pair-bit code whose first pair is the top bit."""
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    padded = code << (6 * ngroups - nbits)
    body = bytes(((padded >> (6 * (ngroups - 1 - i))) & 63) + 63 for i in range(ngroups))
    return bytes([n + 63]) + body


def vertex_keys(g: Graph) -> list[int]:
    base = g.n + 1
    top = base**g.n
    keys = []
    for v in range(g.n):
        seen = frontier = 1 << v
        key, scale = 1, 1
        while True:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            scale *= base
            key += frontier.bit_count() * scale
        keys.append(key + (g.n - seen.bit_count()) * top)
    return keys


def _code(g: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, g.n):
        rj = g.rows[order[j]]
        for i in range(j):
            code = (code << 1) | ((rj >> order[i]) & 1)
    return code


def canonical_code(g: Graph) -> int:
    if g.n > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical forms are limited to n <= {CANONICAL_MAX_ORDER}")
    keys = vertex_keys(g)
    cells: dict[int, list[int]] = {}
    for v in sorted(range(g.n), key=lambda v: keys[v]):
        cells.setdefault(keys[v], []).append(v)
    blocks = [cells[k] for k in sorted(cells)]
    best = None
    for parts in product(*(permutations(b) for b in blocks)):
        order = [v for part in parts for v in part]
        c = _code(g, order)
        if best is None or c < best:
            best = c
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """graph6 of the canonical relabelling; equal iff isomorphic."""
    return code_to_graph6(canonical_code(g), g.n)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    return canonical_code(g) == canonical_code(h)


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every bijection; reference check for tiny graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    target = h.rows
    return any(g.relabel(p).rows == target for p in permutations(range(g.n)))


def canonical_codes(masks: np.ndarray, n: int) -> np.ndarray:
    """Compiled canonical codes for an array of edge masks."""
    if n > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical forms are limited to n <= {CANONICAL_MAX_ORDER}")
    out = np.zeros(len(masks), dtype=np.int64)
    _kernels.canon_codes_from_masks(np.asarray(masks, dtype=np.int64), n, out)
    return out


def dedup_masks(masks, n: int) -> list[bytes]:
    """One canonical graph6 per isomorphism class, in ascending byte order."""
    if len(masks) == 0:
        return []
    codes = canonical_codes(np.fromiter(masks, dtype=np.int64, count=len(masks)), n)
    return sorted(code_to_graph6(int(c), n) for c in np.unique(codes))
