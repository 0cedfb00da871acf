"""Graph representation, sequential sums, distances and remoteness.

Graphs are stored as a tuple of adjacency rows, one Python int bitmask per
vertex.  All distance quantities are exact: transmissions are integers and
average distances / remoteness are :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 62


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph arguments."""


class DisconnectedGraphError(GraphError):
    """Raised when a distance quantity is requested on a disconnected graph."""


class Graph6Error(GraphError):
    """Raised when a graph6 record cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``rows[i]`` is a bitmask of the neighbours of ``i``.  Instances are
    immutable and hashable; use the builders or :meth:`from_edges` rather
    than constructing rows by hand.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in [1, {MAX_ORDER}], got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise GraphError(f"row {i} has out-of-range bits or a loop")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # rows already known to be symmetric and loop-free
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not (self.rows[u] >> v) & 1
        ]

    def add_edge(self, u: int, v: int) -> Graph:
        """Return a new graph with the edge ``uv`` added."""
        if u == v:
            raise GraphError("loops are not allowed")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``i`` becomes ``perm[i]``."""
        rows = [0] * self.n
        for i, r in enumerate(self.rows):
            pi = perm[i]
            for j in _bits(r):
                rows[pi] |= 1 << perm[j]
        return Graph(self.n, tuple(rows))

    def is_connected(self) -> bool:
        return _reach(self.rows, 0) == (1 << self.n) - 1

    def min_degree(self) -> int:
        return min(r.bit_count() for r in self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self).decode()!r})"


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _reach(rows: Sequence[int], v: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


# --- sequential sums --------------------------------------------------------


class BlockKind(Enum):
    COMPLETE = "C"
    EMPTY = "E"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    size: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.size}"


def C(size: int) -> Block:
    return Block(BlockKind.COMPLETE, size)


def E(size: int) -> Block:
    return Block(BlockKind.EMPTY, size)


def parse_blocks(text: str) -> list[Block]:
    """Parse ``"C1,C2,E3"`` into a block list."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        kind, size = tok[0].upper(), tok[1:]
        if kind not in "CE" or not size.isdigit():
            raise GraphError(f"bad block token {tok!r}")
        out.append(Block(BlockKind(kind), int(size)))
    return out


def from_block_sequence(blocks: Sequence[Block]) -> Graph:
    """Realise the sequential sum of complete / edgeless blocks.

    Vertices are numbered left to right.  Every vertex of block ``i`` is
    joined to every vertex of block ``i + 1``; a COMPLETE block is a clique
    and an EMPTY block is an independent set.
    """
    if not blocks:
        raise GraphError("empty block list")
    if any(b.size < 1 for b in blocks):
        raise GraphError("block sizes must be positive")
    n = sum(b.size for b in blocks)
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    masks = []
    start = 0
    for b in blocks:
        masks.append(((1 << b.size) - 1) << start)
        start += b.size
    rows = [0] * n
    start = 0
    for i, b in enumerate(blocks):
        join = 0
        if i > 0:
            join |= masks[i - 1]
        if i + 1 < len(blocks):
            join |= masks[i + 1]
        for v in range(start, start + b.size):
            inner = masks[i] & ~(1 << v) if b.kind is BlockKind.COMPLETE else 0
            rows[v] = join | inner
        start += b.size
    return Graph._trusted(n, tuple(rows))


# --- builders ---------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


# --- distances --------------------------------------------------------------


@dataclass(frozen=True)
class DistanceProfile:
    """Layer sizes ``n_0, n_1, ..., n_d`` around ``source``."""

    source: int
    layer_counts: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layer_counts) - 1


def _layers(g: Graph, v: int) -> list[int]:
    """BFS from ``v``; returns the vertex bitmask of every layer."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    rows = g.rows
    seen = frontier = 1 << v
    layers = [frontier]
    while True:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        layers.append(frontier)
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraphError("disconnected graph")
    return layers


def distances_from(g: Graph, v: int) -> list[int]:
    dist = [0] * g.n
    for d, layer in enumerate(_layers(g, v)):
        for u in _bits(layer):
            dist[u] = d
    return dist


def distance_layers(g: Graph, v: int) -> DistanceProfile:
    return DistanceProfile(v, tuple(layer.bit_count() for layer in _layers(g, v)))


def transmission(g: Graph, v: int) -> int:
    return sum(d * layer.bit_count() for d, layer in enumerate(_layers(g, v)))


def avg_distance(g: Graph, v: int) -> Fraction:
    if g.n < 2:
        raise GraphError("average distance needs n >= 2")
    return Fraction(transmission(g, v), g.n - 1)


def transmissions(g: Graph) -> list[int]:
    """Transmission of every vertex, via the compiled BFS."""
    from . import _kernels

    out = np.zeros(g.n, dtype=np.int64)
    if not _kernels.transmissions_rows(np.array(g.rows, dtype=np.uint64), g.n, out):
        raise DisconnectedGraphError("disconnected graph")
    return out.tolist()


def remoteness(g: Graph) -> tuple[Fraction, frozenset[int]]:
    """Maximum average distance and every vertex attaining it."""
    if g.n < 2:
        raise GraphError("remoteness needs n >= 2")
    sig = transmissions(g)
    best = max(sig)
    return Fraction(best, g.n - 1), frozenset(v for v, s in enumerate(sig) if s == best)


def rho(g: Graph) -> Fraction:
    """Remoteness value only."""
    return remoteness(g)[0]


def diameter(g: Graph) -> int:
    return max(len(_layers(g, v)) - 1 for v in range(g.n))


# --- graph6 -----------------------------------------------------------------

_HEADER = b">>graph6<<"


def encode_graph6(g: Graph) -> bytes:
    """Short-form graph6 encoding (``n <= 62``), without header or newline."""
    out = bytearray([g.n + 63])
    acc = nbits = 0
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    if any(not 63 <= c <= 126 for c in data):
        raise Graph6Error("byte outside the printable graph6 range")
    n = data[0] - 63
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} not supported (short form only, n <= {MAX_ORDER})")
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[1:]
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} edge bytes for n={n}, got {len(body)}")
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = expected * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    bits >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))
