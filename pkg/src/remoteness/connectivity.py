"""Vertex / edge connectivity via unit-capacity max-flow, and triangle tests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphcore import DisconnectedGraphError, Graph, GraphError, _bits


@dataclass(frozen=True)
class ConnectivityFacts:
    vertex_connectivity: int
    edge_connectivity: int
    triangle_free: bool


def _max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a residual adjacency dict; mutates ``cap``."""
    flow = 0
    while limit is None or flow < limit:
        parent = {s: s}
        q = deque([s])
        while q and t not in parent:
            u = q.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    q.append(w)
        if t not in parent:
            break
        w = t
        while w != s:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] = cap[w].get(u, 0) + 1
            w = u
        flow += 1
    return flow


def _require_connected(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("connectivity needs n >= 2")
    if not g.is_connected():
        raise DisconnectedGraphError("disconnected graph")


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    cap = [{w: 1 for w in _bits(r)} for r in g.rows]
    return _max_flow(cap, s, t)


def edge_connectivity(g: Graph) -> int:
    """Minimum over ``t != 0`` of the 0-t max-flow with unit edge capacities."""
    _require_connected(g)
    best = g.min_degree()
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t))
    return best


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Number of internally vertex-disjoint s-t paths, ``s``, ``t`` non-adjacent.

    Each vertex ``v`` is split into ``v_in = 2v`` and ``v_out = 2v + 1`` joined
    by a unit arc; edges become arcs ``u_out -> v_in`` with enough capacity
    never to bind.
    """
    if g.has_edge(s, t):
        raise GraphError("local vertex connectivity needs non-adjacent endpoints")
    big = g.n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        for w in _bits(g.rows[v]):
            cap[2 * v + 1][2 * w] = big
    return _max_flow(cap, 2 * s + 1, 2 * t)


def vertex_connectivity(g: Graph) -> int:
    """``n - 1`` for complete graphs, otherwise the minimum local value over
    non-adjacent pairs."""
    _require_connected(g)
    pairs = g.non_edges()
    if not pairs:
        return g.n - 1
    best = g.min_degree()
    for s, t in pairs:
        if best == 0:
            break
        best = min(best, local_vertex_connectivity(g, s, t))
    return best


def is_kappa_connected(g: Graph, kappa: int) -> bool:
    return vertex_connectivity(g) >= kappa


def is_lambda_edge_connected(g: Graph, lam: int) -> bool:
    return edge_connectivity(g) >= lam


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    return not any(rows[u] & rows[v] for u, v in g.edges())


def is_bipartite(g: Graph) -> bool:
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        q = deque([start])
        while q:
            u = q.popleft()
            for w in _bits(g.rows[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def connectivity_facts(g: Graph) -> ConnectivityFacts:
    return ConnectivityFacts(vertex_connectivity(g), edge_connectivity(g), is_triangle_free(g))
