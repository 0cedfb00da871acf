"""Exhaustive / corpus verification of the remoteness bounds.

Each graph's exact remoteness is compared with the bound evaluated at its
own order and size.  Work is split into contiguous partitions (edge-mask
ranges for the internal enumeration, per-order batches for corpora); every
partition yields a :class:`_Partial` and partials are merged with an
associative, order-independent rule before witnesses are deduplicated by
canonical form.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

import numpy as np

from .. import _kernels as K
from ..bounds import (
    bound_kappa,
    bound_lambda_order,
    bound_lambda_size,
    bound_order,
    bound_size,
    bound_triangle_free,
)
from ..connectivity import edge_connectivity, is_triangle_free, vertex_connectivity
from ..families import (
    FamilyError,
    enumerate_lambda_pc,
    kappa_pc_size_range,
    lambda_pc_graph,
    min_kappa_order,
    pk_kappa,
    pk_lambda,
)
from ..graphcore import Graph, encode_graph6, path, rho, transmissions
from .canonical import (
    CANONICAL_MAX_ORDER,
    canonical_code,
    code_to_graph6,
    dedup_masks,
    graph_mask,
)
from .corpus import CorpusError, CorpusSpec, FilterKind, GraphFilter, load_graph6
from .enumeration import internal_table, mask_chunks
from .report import CellResult, VerificationReport


class HypothesisMismatch(CorpusError):
    """The corpus filter does not match the theorem's hypothesis."""


# --- theorem registry ---------------------------------------------------------

BoundFn = Callable[[int, int, "int | None"], "Fraction | None"]
RefFn = Callable[[int, int, "int | None"], "Graph | None"]
ClaimFn = Callable[[int, int, "int | None"], bool]


def _never(n: int, m: int, p: int | None) -> bool:
    return False


def _no_ref(n: int, m: int, p: int | None) -> None:
    return None


@dataclass(frozen=True)
class Theorem:
    id: str
    description: str
    filter_kind: FilterKind
    bound: BoundFn
    reference: RefFn = _no_ref
    uniqueness: ClaimFn = _never
    fixed_param: int | None = None
    excludes_complete: bool = False
    aliases: tuple[str, ...] = field(default=())


def _path_ref(n, m, p):
    return path(n)


def _size_window(n, m):
    return n >= 4 and n - 1 <= m <= comb(n - 1, 2)


def _pk1_ref(n, m, p):
    return pk_kappa(n, m, 1) if _size_window(n, m) else None


@lru_cache(maxsize=None)
def _pk_kappa_rho(n: int, m: int, kappa: int) -> Fraction | None:
    if n < min_kappa_order(kappa):
        return None
    return rho(pk_kappa(n, min(m, comb(n - 1, 2)), kappa))


def _kappa_window(n, m, kappa):
    if n < min_kappa_order(kappa):
        return False
    lo, hi, res = kappa_pc_size_range(n, kappa)
    return lo <= m <= hi and m % kappa == res


def _pk_kappa_ref(n, m, kappa):
    if n < min_kappa_order(kappa):
        return None
    return pk_kappa(n, min(m, comb(n - 1, 2)), kappa)


@lru_cache(maxsize=None)
def _pk_lambda_rho(n: int, m: int, lam: int) -> Fraction | None:
    if m >= comb(n, 2):
        return None
    try:
        return rho(pk_lambda(n, m, lam))
    except FamilyError:
        return None


def _pk_lambda_ref(n, m, lam):
    try:
        return pk_lambda(n, m, lam)
    except FamilyError:
        return None


def _lambda_min_ref(n, m, lam):
    try:
        return lambda_pc_graph(enumerate_lambda_pc(n, lam)[0][0])
    except FamilyError:
        return None


def _lambda_order_bound(n, m, lam):
    return bound_lambda_order(n, lam) if n >= lam + 1 else None


def _lambda_size_bound(n, m, lam):
    return bound_lambda_size(n, m, lam).value


def _kappa_formula_bound(n, m, kappa):
    return bound_kappa(n, m, kappa).value


def _tf_bound(n, m, p):
    return bound_triangle_free(n, m) if n - 1 <= m <= n * n // 4 else None


THEOREMS: dict[str, Theorem] = {}


def _register(t: Theorem) -> None:
    THEOREMS[t.id] = t


_register(Theorem("THM_1_1", "remoteness at most n/2, equality only for the path",
                  FilterKind.CONNECTED, lambda n, m, p: bound_order(n), _path_ref,
                  lambda n, m, p: True, aliases=("thm1.1",)))
_register(Theorem("THM_1_2", "remoteness at most (n+2)/2 - m/(n-1)",
                  FilterKind.CONNECTED, lambda n, m, p: bound_size(n, m), _pk1_ref,
                  aliases=("thm1.2",)))
_register(Theorem("COR_3_5", "size bound with unique extremal graph PK(n,m,1)",
                  FilterKind.CONNECTED, lambda n, m, p: bound_size(n, m), _pk1_ref,
                  lambda n, m, p: _size_window(n, m), aliases=("cor3.5",)))
_register(Theorem("THM_3_3", "kappa-connected graphs: remoteness at most that of PK(n,m,kappa)",
                  FilterKind.KAPPA, lambda n, m, k: _pk_kappa_rho(n, m, k), _pk_kappa_ref,
                  lambda n, m, k: _kappa_window(n, m, k), aliases=("thm3.3",)))
_register(Theorem("COR_3_4", "closed-form kappa bound inside its size window",
                  FilterKind.KAPPA, _kappa_formula_bound, _pk_kappa_ref, aliases=("cor3.4",)))
_register(Theorem("THM_4_3", "non-complete lambda-edge-connected graphs: at most rho(PK^lambda)",
                  FilterKind.LAMBDA, lambda n, m, l: _pk_lambda_rho(n, m, l), _pk_lambda_ref,
                  excludes_complete=True, aliases=("thm4.3",)))
for _lam, _sfx in ((None, ""), (2, "A"), (3, "B")):
    _register(Theorem(f"COR_4_4{_sfx}", "lambda-edge-connected graphs: order-only bound",
                      FilterKind.LAMBDA, _lambda_order_bound, _lambda_min_ref,
                      fixed_param=_lam, aliases=(f"cor4.4{_sfx.lower()}",)))
    _register(Theorem(f"COR_4_6{_sfx}", "lambda-edge-connected graphs: order-and-size bound",
                      FilterKind.LAMBDA, _lambda_size_bound, _pk_lambda_ref,
                      fixed_param=_lam, aliases=(f"cor4.6{_sfx.lower()}",)))
_register(Theorem("THM_5_1", "triangle-free graphs: at most n/2 + 2 - 2m/(n-1)",
                  FilterKind.TRIANGLE_FREE, lambda n, m, p: _tf_bound(n, m, p),
                  aliases=("thm5.1",)))


def resolve_theorem(name: str) -> Theorem:
    key = name.strip()
    if key.upper() in THEOREMS:
        return THEOREMS[key.upper()]
    for t in THEOREMS.values():
        if key.lower() in t.aliases:
            return t
    raise KeyError(f"unknown theorem {name!r}; known: {', '.join(sorted(THEOREMS))}")


def resolve_filter(theorem: Theorem, f: GraphFilter | None, param: int | None = None) -> GraphFilter:
    """Default the corpus filter to the theorem hypothesis, or reject a mismatch."""
    kind = theorem.filter_kind
    if f is None:
        if kind in (FilterKind.KAPPA, FilterKind.LAMBDA):
            p = theorem.fixed_param if theorem.fixed_param is not None else param
            if p is None:
                raise HypothesisMismatch(f"{theorem.id} needs a {kind.value.lower()} parameter")
            return GraphFilter(kind, p)
        return GraphFilter(kind)
    if f.kind is not kind:
        raise HypothesisMismatch(f"{theorem.id} requires filter {kind.value}, got {f}")
    if theorem.fixed_param is not None and f.param != theorem.fixed_param:
        raise HypothesisMismatch(f"{theorem.id} requires {kind.value}({theorem.fixed_param}), got {f}")
    if param is not None and f.param != param:
        raise HypothesisMismatch(f"parameter {param} disagrees with filter {f}")
    return f


# --- partitioned aggregation -------------------------------------------------


@dataclass
class _Cell:
    count: int = 0
    max_sigma: int = -1
    witnesses: set[int] = field(default_factory=set)

    def absorb(self, other: _Cell) -> None:
        self.count += other.count
        if other.max_sigma > self.max_sigma:
            self.max_sigma = other.max_sigma
            self.witnesses = set(other.witnesses)
        elif other.max_sigma == self.max_sigma:
            self.witnesses |= other.witnesses


@dataclass
class _Partial:
    cells: dict[tuple[int, int], _Cell] = field(default_factory=dict)
    violations: list[tuple[int, int, int, int]] = field(default_factory=list)
    scanned: int = 0
    excluded: int = 0

    def merge(self, other: _Partial) -> _Partial:
        out = _Partial(scanned=self.scanned + other.scanned, excluded=self.excluded + other.excluded)
        for src in (self, other):
            for key, c in src.cells.items():
                out.cells.setdefault(key, _Cell()).absorb(c)
        out.violations = sorted(self.violations + other.violations)
        return out


class _Context:
    """Bound values per (n, m) for one theorem and parameter."""

    def __init__(self, theorem: Theorem, param: int | None):
        self.theorem = theorem
        self.param = param
        self._bounds: dict[tuple[int, int], Fraction | None] = {}

    def bound(self, n: int, m: int) -> Fraction | None:
        key = (n, m)
        if key not in self._bounds:
            self._bounds[key] = self.theorem.bound(n, m, self.param)
        return self._bounds[key]


def _select(table: np.ndarray, f: GraphFilter) -> np.ndarray:
    sel = table[:, K.CONNECTED] == 1
    if f.kind is FilterKind.KAPPA:
        sel &= table[:, K.KAPPA] >= f.param
    elif f.kind is FilterKind.LAMBDA:
        sel &= table[:, K.LAMBDA] >= f.param
    elif f.kind is FilterKind.TRIANGLE_FREE:
        sel &= table[:, K.TRIANGLE_FREE] == 1
    return sel


def _aggregate(ctx: _Context, f: GraphFilter, corpus: CorpusSpec, n: int,
               masks: np.ndarray, table: np.ndarray) -> _Partial:
    part = _Partial()
    sel = _select(table, f)
    sizes = table[:, K.SIZE]
    if corpus.size_exact is not None:
        sel &= sizes == corpus.size_exact
    elif corpus.size_at_least is not None:
        sel &= sizes >= corpus.size_at_least
    if ctx.theorem.excludes_complete:
        sel &= sizes != n * (n - 1) // 2
    idx = np.flatnonzero(sel)
    part.scanned = len(idx)
    part.excluded = len(table) - len(idx)
    if not len(idx):
        return part
    sig = table[idx, K.MAX_SIGMA]
    ms = sizes[idx]
    for m in np.unique(ms):
        m = int(m)
        in_cell = ms == m
        s_cell = sig[in_cell]
        best = int(s_cell.max())
        cell = _Cell(int(in_cell.sum()), best,
                     {int(x) for x in masks[idx[in_cell][s_cell == best]]})
        part.cells[(n, m)] = cell
        bound = ctx.bound(n, m)
        if bound is None:
            continue
        # sigma / (n - 1) > p / q  <=>  sigma * q > p * (n - 1)
        over = s_cell * bound.denominator > bound.numerator * (n - 1)
        if over.any():
            bad = idx[in_cell][over]
            for i, s in zip(bad, s_cell[over]):
                part.violations.append((n, m, int(masks[i]), int(s)))
    return part


def _python_table(graphs: list[Graph]) -> np.ndarray:
    table = np.zeros((len(graphs), K.N_COLS), dtype=np.int64)
    for i, g in enumerate(graphs):
        row = table[i]
        row[K.SIZE] = g.m
        if not g.is_connected():
            continue
        row[K.CONNECTED] = 1
        row[K.MAX_SIGMA] = max(transmissions(g))
        row[K.KAPPA] = vertex_connectivity(g)
        row[K.LAMBDA] = edge_connectivity(g)
        row[K.TRIANGLE_FREE] = int(is_triangle_free(g))
    return table


def _internal_partials(ctx, f, corpus, jobs) -> list[_Partial]:
    n = corpus.internal_n
    table = internal_table(n, jobs)

    def work(chunk):
        lo, hi = chunk
        return _aggregate(ctx, f, corpus, n, np.arange(lo, hi, dtype=np.int64), table[lo:hi])

    chunks = mask_chunks(n)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, chunks))
    return [work(c) for c in chunks]


def _corpus_partials(ctx, f, corpus) -> tuple[list[_Partial], dict[int, bool]]:
    by_order: dict[int, list[Graph]] = {}
    for _, g in load_graph6(corpus.path):
        if g.n >= 2:
            by_order.setdefault(g.n, []).append(g)
    parts = []
    for n in sorted(by_order):
        graphs = by_order[n]
        masks = [graph_mask(g) for g in graphs]
        if n <= CANONICAL_MAX_ORDER:
            arr = np.array(masks, dtype=np.int64)
            table = np.zeros((len(arr), K.N_COLS), dtype=np.int64)
            K.scan_mask_array(arr, n, table)
        else:
            arr = np.array(masks, dtype=object)
            table = _python_table(graphs)
        parts.append(_aggregate(ctx, f, corpus, n, arr, table))
    return parts, {n: n <= CANONICAL_MAX_ORDER for n in by_order}


def _labeled_graph6(mask: int, n: int) -> str:
    from .canonical import graph_from_mask

    return encode_graph6(graph_from_mask(mask, n)).decode()


def _finalize(ctx: _Context, corpus: CorpusSpec, f: GraphFilter, total: _Partial) -> VerificationReport:
    theorem, param = ctx.theorem, ctx.param
    cells: list[CellResult] = []
    failures: list[dict] = []
    for (n, m) in sorted(total.cells):
        acc = total.cells[(n, m)]
        max_rho = Fraction(acc.max_sigma, n - 1)
        bound = ctx.bound(n, m)
        equality = None if bound is None else max_rho == bound
        can_dedup = n <= CANONICAL_MAX_ORDER
        if can_dedup:
            witnesses = [w.decode() for w in dedup_masks(sorted(acc.witnesses), n)]
        else:
            witnesses = sorted(_labeled_graph6(w, n) for w in acc.witnesses)
        ref = theorem.reference(n, m, param)
        claimed = theorem.uniqueness(n, m, param)
        iso = None
        ref_g6 = None
        if ref is not None:
            ref_g6 = encode_graph6(ref).decode()
            if equality and can_dedup:
                ref_canon = code_to_graph6(canonical_code(ref), n).decode()
                iso = witnesses == [ref_canon]
        cell = CellResult(n, m, acc.count, max_rho, witnesses, len(acc.witnesses), bound,
                          equality, iso, claimed, ref_g6)
        cells.append(cell)
        if claimed and equality and iso is False:
            failures.append({"n": n, "m": m, "witnesses": witnesses, "reference": ref_g6})
    violations = []
    for n, m, mask, sigma in sorted(total.violations):
        violations.append({
            "n": n,
            "m": m,
            "graph6": _labeled_graph6(mask, n),
            "rho": str(Fraction(sigma, n - 1)),
            "bound": str(ctx.bound(n, m)),
        })
    return VerificationReport(corpus.with_filter(f), theorem.id, param, total.scanned,
                              total.excluded, cells, violations, failures)


def verify_theorem(theorem_id: str, corpus: CorpusSpec, param: int | None = None,
                   jobs: int = 1) -> VerificationReport:
    """Scan a corpus and compare every graph's remoteness with the theorem's bound.

    ``param`` supplies kappa / lambda when the corpus carries no filter.  The
    result is identical for every ``jobs`` value.
    """
    theorem = resolve_theorem(theorem_id)
    f = resolve_filter(theorem, corpus.filter, param)
    ctx = _Context(theorem, f.param)
    if corpus.internal_n is not None:
        parts = _internal_partials(ctx, f, corpus, max(1, jobs))
    else:
        parts, _ = _corpus_partials(ctx, f, corpus)
    total = _Partial()
    for p in parts:
        total = total.merge(p)
    return _finalize(ctx, corpus, f, total)


def check_uniqueness_window(n: int, kappa: int, corpus: CorpusSpec | None = None,
                            jobs: int = 1) -> VerificationReport:
    """Uniqueness of the extremal kappa-connected graphs inside the size window.

    For every admissible ``m`` the witnesses are gathered from all cells of
    size at least ``m`` whose remoteness equals that of ``PK(n, m, kappa)``;
    exactly one isomorphism class, that of ``PK(n, m, kappa)``, must remain.
    Attainment of the bound is reported per cell via ``equalityHolds``.
    """
    if corpus is None:
        corpus = CorpusSpec(internal_n=n)
    corpus = corpus.with_filter(GraphFilter(FilterKind.KAPPA, kappa))
    base = verify_theorem("THM_3_3", corpus, jobs=jobs)
    lo, hi, res = kappa_pc_size_range(n, kappa)
    cells: list[CellResult] = []
    failures = list(base.uniqueness_failures)
    for m in range(lo, hi + 1):
        if m % kappa != res:
            continue
        target = rho(pk_kappa(n, m, kappa))
        ref = pk_kappa(n, m, kappa)
        ref_canon = code_to_graph6(canonical_code(ref), n).decode()
        pool: set[str] = set()
        labeled = scanned = 0
        top = None
        for c in base.per_cell:
            if c.n != n or c.m < m:
                continue
            scanned += c.graphs_scanned
            top = c.max_rho if top is None else max(top, c.max_rho)
            if c.max_rho == target:
                pool |= set(c.witnesses)
                labeled += c.witness_labeled_count
        witnesses = sorted(pool)
        attained = bool(witnesses)
        iso = (witnesses == [ref_canon]) if attained else None
        cells.append(CellResult(n, m, scanned, top if top is not None else Fraction(0),
                                witnesses, labeled, target, attained, iso, True,
                                encode_graph6(ref).decode()))
        if attained and not iso:
            failures.append({"n": n, "m": m, "witnesses": witnesses, "reference": ref_canon})
    return VerificationReport(corpus, "THM_3_3_UNIQUENESS", kappa, base.graphs_scanned,
                              base.graphs_excluded, cells, base.violations, failures)
