"""Compiled inner loops for exhaustive scans.

Graphs are passed as ``uint64`` adjacency rows.  Edge masks use the graph6
pair order ``(0,1), (0,2), (1,2), (0,3), ...`` with pair ``k`` at bit ``k``.

Connectivity here is computed by cut enumeration (every vertex subset /
every vertex bipartition), independently of the max-flow routines in
:mod:`remoteness.connectivity`; the test-suite cross-checks the two.
"""

from __future__ import annotations

import numpy as np
from numba import njit

KERNEL_MAX_ORDER = 11  # C(11, 2) = 55 pair bits fit in an int64 mask / code

# columns of the per-graph result table
CONNECTED, SIZE, MAX_SIGMA, KAPPA, LAMBDA, TRIANGLE_FREE = range(6)
N_COLS = 6


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True, nogil=True)
def _rows_from_mask(mask, n, rows):
    for i in range(n):
        rows[i] = np.uint64(0)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                rows[i] |= np.uint64(1) << np.uint64(j)
                rows[j] |= np.uint64(1) << np.uint64(i)
            k += 1


@njit(cache=True, nogil=True)
def _reach(rows, n, start, allowed):
    one = np.uint64(1)
    seen = one << np.uint64(start)
    frontier = seen
    while frontier:
        nxt = np.uint64(0)
        for u in range(n):
            if (frontier >> np.uint64(u)) & one:
                nxt |= rows[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@njit(cache=True, nogil=True)
def _transmission(rows, n, v):
    """Sum of distances from v, or -1 when some vertex is unreachable."""
    one = np.uint64(1)
    full = (one << np.uint64(n)) - one
    seen = one << np.uint64(v)
    frontier = seen
    total = 0
    d = 0
    while frontier:
        d += 1
        nxt = np.uint64(0)
        for u in range(n):
            if (frontier >> np.uint64(u)) & one:
                nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        total += d * _popcount(frontier)
    if seen != full:
        return -1
    return total


@njit(cache=True, nogil=True)
def _analyze(rows, n, out):
    one = np.uint64(1)
    full = (one << np.uint64(n)) - one
    m = 0
    delta = n
    for u in range(n):
        du = _popcount(rows[u])
        m += du
        if du < delta:
            delta = du
    out[SIZE] = m // 2
    if _reach(rows, n, 0, full) != full:
        out[CONNECTED] = 0
        return
    out[CONNECTED] = 1
    best = 0
    for v in range(n):
        s = _transmission(rows, n, v)
        if s > best:
            best = s
    out[MAX_SIGMA] = best

    tf = 1
    for u in range(n):
        for w in range(u + 1, n):
            if (rows[u] >> np.uint64(w)) & one:
                if rows[u] & rows[w]:
                    tf = 0
                    break
        if tf == 0:
            break
    out[TRIANGLE_FREE] = tf

    # edge connectivity: minimum cut over bipartitions (S containing 0)
    lam = delta
    for s in range(1, 1 << n, 2):
        S = np.uint64(s)
        if S == full:
            continue
        cut = 0
        for u in range(n):
            if (S >> np.uint64(u)) & one:
                cut += _popcount(rows[u] & ~S)
        if cut < lam:
            lam = cut
    out[LAMBDA] = lam

    # vertex connectivity: smallest separating vertex set, n-1 if complete
    if m // 2 == n * (n - 1) // 2:
        out[KAPPA] = n - 1
        return
    kap = delta
    for s in range(1, 1 << n):
        S = np.uint64(s)
        size = _popcount(S)
        if size >= kap or size > n - 2:
            continue
        allowed = full & ~S
        start = 0
        while (S >> np.uint64(start)) & one:
            start += 1
        if _reach(rows, n, start, allowed) != allowed:
            kap = size
    out[KAPPA] = kap


@njit(cache=True, nogil=True)
def scan_masks(lo, hi, n, table):
    """Fill ``table[i]`` for edge mask ``lo + i``."""
    rows = np.zeros(n, dtype=np.uint64)
    for i in range(hi - lo):
        _rows_from_mask(np.int64(lo + i), n, rows)
        _analyze(rows, n, table[i])


@njit(cache=True, nogil=True)
def scan_mask_array(masks, n, table):
    rows = np.zeros(n, dtype=np.uint64)
    for i in range(masks.shape[0]):
        _rows_from_mask(masks[i], n, rows)
        _analyze(rows, n, table[i])


@njit(cache=True, nogil=True)
def _vertex_keys(rows, n, keys):
    """Distance-profile key per vertex (unreachable count as the top digit)."""
    one = np.uint64(1)
    base = n + 1
    top = 1
    for _ in range(n):
        top *= base
    for v in range(n):
        seen = one << np.uint64(v)
        frontier = seen
        key = 1
        scale = 1
        while True:
            nxt = np.uint64(0)
            for u in range(n):
                if (frontier >> np.uint64(u)) & one:
                    nxt |= rows[u]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            scale *= base
            key += _popcount(frontier) * scale
        keys[v] = key + (n - _popcount(seen)) * top


@njit(cache=True, nogil=True)
def _next_perm(a, lo, hi):
    i = hi - 2
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        # wrap to sorted
        a[lo:hi] = np.sort(a[lo:hi])
        return False
    j = hi - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:hi] = a[i + 1:hi][::-1].copy()
    return True


@njit(cache=True, nogil=True)
def canon_code(rows, n):
    """Minimum pair-bit code over orderings consistent with vertex keys."""
    one = np.uint64(1)
    keys = np.zeros(n, dtype=np.int64)
    _vertex_keys(rows, n, keys)
    order = np.argsort(keys, kind="mergesort").astype(np.int64)
    starts = np.zeros(n + 1, dtype=np.int64)
    nb = 0
    for i in range(n):
        if i == 0 or keys[order[i]] != keys[order[i - 1]]:
            starts[nb] = i
            nb += 1
    starts[nb] = n
    for b in range(nb):
        order[starts[b]:starts[b + 1]] = np.sort(order[starts[b]:starts[b + 1]])
    best = np.int64(-1)
    while True:
        code = np.int64(0)
        for j in range(1, n):
            rj = rows[order[j]]
            for i in range(j):
                code = (code << 1) | np.int64((rj >> np.uint64(order[i])) & one)
        if best < 0 or code < best:
            best = code
        b = nb - 1
        while b >= 0:
            if _next_perm(order, starts[b], starts[b + 1]):
                break
            b -= 1
        if b < 0:
            break
    return best


@njit(cache=True, nogil=True)
def canon_codes_from_masks(masks, n, out):
    rows = np.zeros(n, dtype=np.uint64)
    for i in range(masks.shape[0]):
        _rows_from_mask(masks[i], n, rows)
        out[i] = canon_code(rows, n)


@njit(cache=True, nogil=True)
def transmissions_rows(rows, n, out):
    """Transmission of every vertex; returns False if the graph is disconnected."""
    for v in range(n):
        s = _transmission(rows, n, v)
        if s < 0:
            return False
        out[v] = s
    return True
