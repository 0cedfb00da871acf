"""Path-complete extremal families and the bipartite sharpness construction.

Members are always selected by enumerating every admissible parameter tuple
and counting edges of the realised graph.  Closed-form size formulas live in
:mod:`remoteness.bounds` and are tested against this enumeration, never used
to pick graphs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .graphcore import MAX_ORDER, Block, C, E, Graph, GraphError, from_block_sequence


class FamilyError(GraphError):
    """Raised when family parameters violate their admissibility window."""


class SizeTieWarning(UserWarning):
    """Two distinct family members of the same order share a size."""


# --- kappa-connected path-complete graphs ----------------------------------


@dataclass(frozen=True, order=True)
class KappaPcParams:
    """``K_1 + [K_kappa]^ell + K_a + K_b``."""

    kappa: int
    ell: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.kappa < 1 or self.ell < 1 or self.b < 1:
            raise FamilyError(f"need kappa, ell, b >= 1: {self}")
        if self.a < self.kappa:
            raise FamilyError(f"need a >= kappa: {self}")
        if self.order > MAX_ORDER:
            raise FamilyError(f"order {self.order} exceeds {MAX_ORDER}")

    @property
    def order(self) -> int:
        return 1 + self.ell * self.kappa + self.a + self.b

    def blocks(self) -> list[Block]:
        return [C(1)] + [C(self.kappa)] * self.ell + [C(self.a), C(self.b)]


def kappa_pc_graph(p: KappaPcParams) -> Graph:
    return from_block_sequence(p.blocks())


def _select_distinct(members: list[tuple[object, int]], key) -> list[tuple[object, int]]:
    members.sort(key=lambda pm: (pm[1], key(pm[0])))
    sizes = [s for _, s in members]
    if len(set(sizes)) != len(sizes):
        warnings.warn(
            "distinct family members share a size; ties broken lexicographically",
            SizeTieWarning,
            stacklevel=3,
        )
    return members


@lru_cache(maxsize=None)
def _kappa_members(n: int, kappa: int) -> tuple[tuple[KappaPcParams, int], ...]:
    out: list[tuple[object, int]] = []
    for ell in range(1, (n - 2 - kappa) // kappa + 1):
        rest = n - 1 - ell * kappa
        for b in range(1, rest - kappa + 1):
            p = KappaPcParams(kappa, ell, rest - b, b)
            out.append((p, kappa_pc_graph(p).m))
    return tuple(_select_distinct(out, key=lambda p: (p.ell, p.b)))  # type: ignore[arg-type]


def min_kappa_order(kappa: int) -> int:
    """Smallest order with a kappa-connected path-complete member: K1 + Kk + Kk + K1."""
    return 2 * kappa + 2


def enumerate_kappa_pc(n: int, kappa: int) -> list[tuple[KappaPcParams, int]]:
    """All kappa-connected path-complete graphs of order ``n``, by size."""
    if kappa < 1:
        raise FamilyError("kappa must be >= 1")
    if n < min_kappa_order(kappa):
        raise FamilyError(f"no kappa-connected path-complete graph of order {n} (kappa={kappa})")
    if n > MAX_ORDER:
        raise FamilyError(f"order {n} exceeds {MAX_ORDER}")
    return list(_kappa_members(n, kappa))


def kappa_pc_size_range(n: int, kappa: int) -> tuple[int, int, int]:
    """Closed-form ``(min size, max size, size residue mod kappa)``."""
    if kappa < 1 or n < min_kappa_order(kappa):
        raise FamilyError(f"no kappa-connected path-complete graph of order {n} (kappa={kappa})")
    b = (n - 1) % kappa or kappa
    twice_min = n * (3 * kappa - 1) - 2 * kappa * kappa - kappa + 1 - b * (kappa - b)
    top = comb(n - 1, 2)
    return twice_min // 2, top, top % kappa


def pk_kappa_params(n: int, m: int, kappa: int) -> KappaPcParams:
    if m > comb(n - 1, 2):
        raise FamilyError(f"m={m} exceeds C(n-1,2)={comb(n - 1, 2)}")
    for p, size in enumerate_kappa_pc(n, kappa):
        if size >= m:
            return p
    raise FamilyError(f"no kappa-connected path-complete graph of order {n} and size >= {m}")


def pk_kappa(n: int, m: int, kappa: int) -> Graph:
    """Minimum-size kappa-connected path-complete graph of order n, size >= m."""
    return kappa_pc_graph(pk_kappa_params(n, m, kappa))


# --- lambda-edge-connected path-complete graphs ----------------------------


class LambdaFamily(Enum):
    F1 = 1  # [K1 + K_lam]^k + K_a + K_b,          k >= 1, ab >= lam
    F2 = 2  # [K1 + K_lam]^k + K1 + K_a + K_b,     k >= 0, a >= lam
    F3 = 3  # [K1 + K3]^k + K2 + K_a + K1,         lam = 3, k >= 1, a >= 3


@dataclass(frozen=True)
class LambdaPcParams:
    family: LambdaFamily
    lam: int
    k: int
    a: int
    b: int = 1

    def __post_init__(self) -> None:
        f, lam, k, a, b = self.family, self.lam, self.k, self.a, self.b
        if lam not in (2, 3):
            raise FamilyError(f"lambda must be 2 or 3, got {lam}")
        if a < 1 or b < 1:
            raise FamilyError(f"need a, b >= 1: {self}")
        if f is LambdaFamily.F1 and (k < 1 or a * b < lam):
            raise FamilyError(f"F1 needs k >= 1 and ab >= lambda: {self}")
        if f is LambdaFamily.F2 and (k < 0 or a < lam):
            raise FamilyError(f"F2 needs k >= 0 and a >= lambda: {self}")
        if f is LambdaFamily.F3 and (lam != 3 or k < 1 or a < 3 or b != 1):
            raise FamilyError(f"F3 needs lambda = 3, k >= 1, a >= 3, b = 1: {self}")
        if self.order > MAX_ORDER:
            raise FamilyError(f"order {self.order} exceeds {MAX_ORDER}")

    @property
    def order(self) -> int:
        base = (self.lam + 1) * self.k + self.a + self.b
        if self.family is LambdaFamily.F2:
            return base + 1
        if self.family is LambdaFamily.F3:
            return base + 2
        return base

    def blocks(self) -> list[Block]:
        head = [C(1), C(self.lam)] * self.k
        if self.family is LambdaFamily.F1:
            return head + [C(self.a), C(self.b)]
        if self.family is LambdaFamily.F2:
            return head + [C(1), C(self.a), C(self.b)]
        return head + [C(2), C(self.a), C(1)]

    def sort_key(self) -> tuple[int, int, int]:
        return (self.k, self.family.value, self.b)

    def label(self) -> str:
        if self.family is LambdaFamily.F3:
            return f"F3(lambda=3,k={self.k},a={self.a})"
        return f"{self.family.name}(lambda={self.lam},k={self.k},a={self.a},b={self.b})"


def lambda_pc_graph(p: LambdaPcParams) -> Graph:
    return from_block_sequence(p.blocks())


@lru_cache(maxsize=None)
def _lambda_members(n: int, lam: int) -> tuple[tuple[LambdaPcParams, int], ...]:
    out: list[tuple[object, int]] = []
    step = lam + 1
    for k in range(0, n // step + 1):
        # F1: a + b = n - step*k
        rest = n - step * k
        if k >= 1:
            for b in range(1, rest):
                a = rest - b
                if a * b >= lam:
                    p = LambdaPcParams(LambdaFamily.F1, lam, k, a, b)
                    out.append((p, lambda_pc_graph(p).m))
        # F2: a + b = n - step*k - 1
        rest = n - step * k - 1
        for b in range(1, rest - lam + 1):
            p = LambdaPcParams(LambdaFamily.F2, lam, k, rest - b, b)
            out.append((p, lambda_pc_graph(p).m))
        # F3: a = n - 4k - 3
        if lam == 3 and k >= 1 and n - 4 * k - 3 >= 3:
            p = LambdaPcParams(LambdaFamily.F3, 3, k, n - 4 * k - 3, 1)
            out.append((p, lambda_pc_graph(p).m))
    return tuple(_select_distinct(out, key=lambda p: p.sort_key()))  # type: ignore[attr-defined]


def enumerate_lambda_pc(n: int, lam: int) -> list[tuple[LambdaPcParams, int]]:
    """All lambda-edge-connected path-complete graphs of order ``n``, by size."""
    if lam not in (2, 3):
        raise FamilyError(f"lambda must be 2 or 3, got {lam}")
    if n > MAX_ORDER:
        raise FamilyError(f"order {n} exceeds {MAX_ORDER}")
    members = list(_lambda_members(n, lam))
    if not members:
        raise FamilyError(f"no {lam}-edge-connected path-complete graph of order {n}")
    return members


def min_lambda_order(lam: int) -> int:
    """Smallest order with a lambda-edge-connected path-complete member."""
    return lam + 2


def pk_lambda_params(n: int, m: int, lam: int) -> LambdaPcParams:
    if m >= comb(n, 2):
        raise FamilyError("the complete graph is excluded: need m < C(n,2)")
    for p, size in enumerate_lambda_pc(n, lam):
        if size >= m:
            return p
    raise FamilyError(f"no {lam}-edge-connected path-complete graph of order {n} and size >= {m}")


def pk_lambda(n: int, m: int, lam: int) -> Graph:
    return lambda_pc_graph(pk_lambda_params(n, m, lam))


# --- bipartite construction -------------------------------------------------


@dataclass(frozen=True)
class BpkParams:
    n: int
    m: int
    t: int
    f: int
    a: int
    b: int
    c: int

    def blocks(self) -> list[Block]:
        return [C(1)] * (self.n - self.t + 1) + [E(self.a), E(self.b), E(self.c)]


def bpk_params(n: int, m: int) -> BpkParams:
    if n < 2:
        raise FamilyError("need n >= 2")
    if not n - 1 <= m <= n * n // 4:
        raise FamilyError(f"need n-1 <= m <= floor(n^2/4): n={n}, m={m}")
    excess = m - n
    t = 1
    while t * t // 4 - t - 1 < excess:
        t += 1
    f = t * t // 4 - t - excess
    if n - t + 1 < 1:
        raise FamilyError(f"n - t + 1 >= 1 violated: n={n}, t={t}")
    if not 1 <= f <= t // 2 - 1:
        raise FamilyError(f"1 <= f <= floor(t/2) - 1 violated: t={t}, f={f}")
    return BpkParams(n, m, t, f, t // 2 - f, (t + 1) // 2 - 1, f)


def bpk(n: int, m: int) -> tuple[BpkParams, Graph]:
    """Bipartite graph of order n and size m attaining the triangle-free bound."""
    p = bpk_params(n, m)
    g = from_block_sequence(p.blocks())
    if g.m != m or g.n != n:
        raise FamilyError(f"construction produced order {g.n}, size {g.m}")
    return p, g


def bpk_valid_sizes(n: int) -> list[int]:
    out = []
    for m in range(n - 1, n * n // 4 + 1):
        try:
            bpk_params(n, m)
        except FamilyError:
            continue
        out.append(m)
    return out
