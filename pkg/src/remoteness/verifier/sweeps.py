"""Constructive consistency sweeps over the extremal families.

No graph enumeration happens here: each check realises family members or
the bipartite construction, computes their remoteness by breadth-first
search, and compares the result with the closed-form evaluators in
:mod:`remoteness.bounds` and the structural claims about the families.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..bounds import (
    bound_kappa,
    bound_lambda_order,
    bound_lambda_size,
    epsilon_closed_form,
    epsilon_lambda,
    epsilon_window,
    lambda_base,
    lambda_size_range,
    triangle_free_transmission_cap,
)
from ..connectivity import is_bipartite
from ..families import (
    FamilyError,
    LambdaFamily,
    LambdaPcParams,
    SizeTieWarning,
    bpk,
    bpk_valid_sizes,
    enumerate_kappa_pc,
    enumerate_lambda_pc,
    kappa_pc_graph,
    kappa_pc_size_range,
    lambda_pc_graph,
    min_kappa_order,
    min_lambda_order,
)
from ..graphcore import MAX_ORDER, Graph, remoteness, transmissions


class SweepCheck(Enum):
    KAPPA_FORMULA = "kappa-formula"
    LAMBDA_SHARPNESS = "lambda-sharpness"
    EPSILON_WINDOW = "epsilon-window"
    LAMBDA_DOMINATION = "lambda-domination"
    BPK_EQUALITY = "bpk-equality"
    KAPPA_STRUCTURE = "kappa-structure"
    LAMBDA_STRUCTURE = "lambda-structure"
    EDGE_ADDITION = "edge-addition"


DEFAULT_N_MAX = {
    SweepCheck.KAPPA_FORMULA: 40,
    SweepCheck.LAMBDA_SHARPNESS: 60,
    SweepCheck.EPSILON_WINDOW: 60,
    SweepCheck.LAMBDA_DOMINATION: 60,
    SweepCheck.BPK_EQUALITY: 60,
    SweepCheck.KAPPA_STRUCTURE: 60,
    SweepCheck.LAMBDA_STRUCTURE: 60,
    SweepCheck.EDGE_ADDITION: 12,
}
DEFAULT_KAPPA_MAX = {SweepCheck.KAPPA_FORMULA: 5, SweepCheck.KAPPA_STRUCTURE: 5,
                     SweepCheck.EDGE_ADDITION: 3}


def resolve_check(name: str | SweepCheck) -> SweepCheck:
    if isinstance(name, SweepCheck):
        return name
    key = name.strip()
    for c in SweepCheck:
        if key in (c.value, c.name) or key.upper().replace("-", "_") == c.name:
            return c
    raise ValueError(f"unknown sweep check {name!r}; choose from "
                     + ", ".join(c.value for c in SweepCheck))


@dataclass(frozen=True)
class SweepLimits:
    n_max: int
    kappa_max: int | None = None

    def __post_init__(self) -> None:
        if not 2 <= self.n_max <= MAX_ORDER:
            raise ValueError(f"n_max must be in [2, {MAX_ORDER}]")
        if self.kappa_max is not None and self.kappa_max < 1:
            raise ValueError("kappa_max must be >= 1")

    @classmethod
    def default(cls, check: SweepCheck) -> SweepLimits:
        return cls(DEFAULT_N_MAX[check], DEFAULT_KAPPA_MAX.get(check))

    def to_json(self) -> dict:
        out: dict[str, int] = {"nMax": self.n_max}
        if self.kappa_max is not None:
            out["kappaMax"] = self.kappa_max
        return out


@dataclass
class SweepReport:
    check_id: SweepCheck
    limits: SweepLimits
    items_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    observations: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "checkId": self.check_id.name,
            "limits": self.limits.to_json(),
            "itemsChecked": self.items_checked,
            "mismatchCount": len(self.mismatches),
            "mismatches": self.mismatches,
            "summary": self.summary,
            "observations": self.observations,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["checkId", "itemsChecked", "mismatches"])
        w.writerow([self.check_id.name, self.items_checked, len(self.mismatches)])
        return buf.getvalue()


# --- cached member data -----------------------------------------------------


@dataclass(frozen=True)
class _Member:
    params: object
    size: int
    rho: Fraction
    maximizers: frozenset[int]


def _quiet(fn, *args):
    """Call a family enumerator, turning a size tie into a returned flag."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SizeTieWarning)
        out = fn(*args)
    return out, any(issubclass(w.category, SizeTieWarning) for w in caught)


@lru_cache(maxsize=None)
def _kappa_data(n: int, kappa: int) -> tuple[tuple[_Member, ...], bool]:
    members, tie = _quiet(enumerate_kappa_pc, n, kappa)
    out = []
    for p, size in members:
        r, where = remoteness(kappa_pc_graph(p))
        out.append(_Member(p, size, r, where))
    return tuple(out), tie


@lru_cache(maxsize=None)
def _lambda_data(n: int, lam: int) -> tuple[tuple[_Member, ...], bool]:
    members, tie = _quiet(enumerate_lambda_pc, n, lam)
    out = []
    for p, size in members:
        r, where = remoteness(lambda_pc_graph(p))
        out.append(_Member(p, size, r, where))
    return tuple(out), tie


def _pk_runs(members: tuple[_Member, ...], lo: int, hi: int):
    """Yield ``(m, member)`` where member is the smallest one of size >= m."""
    i = 0
    for m in range(lo, hi + 1):
        while members[i].size < m:
            i += 1
        yield m, members[i]


def _fmt(x: Fraction) -> str:
    return str(x)


# --- checks -----------------------------------------------------------------


def _kappa_formula(lim: SweepLimits, rep: SweepReport) -> None:
    for kappa in range(1, (lim.kappa_max or 5) + 1):
        for n in range(min_kappa_order(kappa), lim.n_max + 1):
            members, _ = _kappa_data(n, kappa)
            lo, hi, _ = kappa_pc_size_range(n, kappa)
            for m, pk in _pk_runs(members, lo, hi):
                b = bound_kappa(n, m, kappa)
                rep.items_checked += 1
                if not b.applicable or b.value != pk.rho:
                    rep.mismatches.append({"n": n, "m": m, "kappa": kappa,
                                           "formula": None if b.value is None else _fmt(b.value),
                                           "direct": _fmt(pk.rho)})


def _lambda_sharpness(lim: SweepLimits, rep: SweepReport) -> None:
    for lam in (2, 3):
        for n in range(min_lambda_order(lam), lim.n_max + 1):
            members, _ = _lambda_data(n, lam)
            first = members[0]
            bound = bound_lambda_order(n, lam)
            rep.items_checked += 1
            if first.rho != bound:
                rep.mismatches.append({"n": n, "lambda": lam, "member": first.params.label(),
                                       "rho": _fmt(first.rho), "bound": _fmt(bound)})


def _epsilon_window(lim: SweepLimits, rep: SweepReport) -> None:
    f2 = {"cases": 0, "printedMatches": 0, "rederivedMatches": 0}
    f1_cases = 0
    for lam in (2, 3):
        lo_eps, hi_eps = epsilon_window(lam)
        extremes: list[Fraction] = []
        for n in range(min_lambda_order(lam), lim.n_max + 1):
            members, _ = _lambda_data(n, lam)
            for m, pk in _pk_runs(members, members[0].size, comb(n, 2) - 1):
                eps = pk.rho - lambda_base(n, m, lam)
                rep.items_checked += 1
                extremes.append(eps)
                if not lo_eps < eps < hi_eps:
                    rep.mismatches.append({"n": n, "m": m, "lambda": lam, "kind": "window",
                                           "epsilon": _fmt(eps)})
                if lam != 2 or pk.size != m:
                    continue
                closed = epsilon_closed_form(n, m, lam)
                if pk.params.family is LambdaFamily.F1:
                    f1_cases += 1
                    if closed["printed"] != eps:
                        rep.mismatches.append({"n": n, "m": m, "lambda": lam, "kind": "F1 closed form",
                                               "epsilon": _fmt(eps), "closedForm": _fmt(closed["printed"])})
                else:
                    f2["cases"] += 1
                    f2["printedMatches"] += closed["printed"] == eps
                    f2["rederivedMatches"] += closed["rederived"] == eps
                    if closed["printed"] != eps and len(rep.observations) < 50:
                        rep.observations.append({
                            "n": n, "m": m, "member": pk.params.label(), "epsilon": _fmt(eps),
                            "printed": _fmt(closed["printed"]), "rederived": _fmt(closed["rederived"])})
        rep.summary[f"lambda{lam}"] = {"window": [_fmt(lo_eps), _fmt(hi_eps)],
                                       "minEpsilon": _fmt(min(extremes)),
                                       "maxEpsilon": _fmt(max(extremes))}
    rep.summary["f1ClosedFormCases"] = f1_cases
    rep.summary["f2ClosedForm"] = f2


def _lambda_domination(lim: SweepLimits, rep: SweepReport) -> None:
    for lam in (2, 3):
        for n in range(min_lambda_order(lam), lim.n_max + 1):
            members, _ = _lambda_data(n, lam)
            for m, pk in _pk_runs(members, members[0].size, comb(n, 2) - 1):
                b = bound_lambda_size(n, m, lam)
                rep.items_checked += 1
                if b.value is None or b.value < pk.rho:
                    rep.mismatches.append({"n": n, "m": m, "lambda": lam, "rho": _fmt(pk.rho),
                                           "bound": None if b.value is None else _fmt(b.value)})


def _bpk_equality(lim: SweepLimits, rep: SweepReport) -> None:
    for n in range(2, lim.n_max + 1):
        for m in bpk_valid_sizes(n):
            p, g = bpk(n, m)
            sig = transmissions(g)
            cap = triangle_free_transmission_cap(n, m)
            rep.items_checked += 1
            if sig[0] != cap or max(sig) != cap or g.m != m or not is_bipartite(g):
                rep.mismatches.append({"n": n, "m": m, "sigma": sig[0], "maxSigma": max(sig),
                                       "cap": cap, "bipartite": is_bipartite(g)})
    rep.summary["example"] = {"n": 8, "m": 10, "sigma": transmissions(bpk(8, 10)[1])[0]} \
        if lim.n_max >= 8 else {}


def _kappa_structure(lim: SweepLimits, rep: SweepReport) -> None:
    for kappa in range(1, (lim.kappa_max or 5) + 1):
        for n in range(min_kappa_order(kappa), lim.n_max + 1):
            members, tie = _kappa_data(n, kappa)
            lo, hi, res = kappa_pc_size_range(n, kappa)
            sizes = [x.size for x in members]
            rep.items_checked += 1
            where = {"n": n, "kappa": kappa}
            if tie or len(set(sizes)) != len(sizes):
                rep.mismatches.append({**where, "kind": "size tie"})
            expected = [s for s in range(lo, hi + 1) if s % kappa == res]
            if sorted(sizes) != expected:
                rep.mismatches.append({**where, "kind": "size set", "min": min(sizes),
                                       "max": max(sizes), "closedForm": [lo, hi, res]})
            for x, y in zip(members, members[1:]):
                if not y.rho < x.rho:
                    rep.mismatches.append({**where, "kind": "monotonicity", "sizes": [x.size, y.size],
                                           "rho": [_fmt(x.rho), _fmt(y.rho)]})
            for x in members:
                p = x.params
                want = {0, n - 1} if (p.a, p.b) == (kappa, 1) else {0}
                if set(x.maximizers) != want:
                    rep.mismatches.append({**where, "kind": "maximizers", "size": x.size,
                                           "maximizers": sorted(x.maximizers)})


def _lambda_structure(lim: SweepLimits, rep: SweepReport) -> None:
    pairs = 0
    for lam in (2, 3):
        for n in range(min_lambda_order(lam), lim.n_max + 1):
            members, tie = _lambda_data(n, lam)
            sizes = [x.size for x in members]
            rep.items_checked += 1
            where = {"n": n, "lambda": lam}
            lo, hi = lambda_size_range(n, lam)
            if tie or len(set(sizes)) != len(sizes):
                rep.mismatches.append({**where, "kind": "size tie"})
            if sizes[0] != lo or sizes[-1] != hi:
                rep.mismatches.append({**where, "kind": "size range", "min": sizes[0], "max": sizes[-1],
                                       "closedForm": [_fmt(lo), hi],
                                       "epsilon": _fmt(epsilon_lambda(n, lam))})
            for x, y in zip(members, members[1:]):
                if y.size - x.size > lam:
                    rep.mismatches.append({**where, "kind": "size gap", "sizes": [x.size, y.size]})
                if y.rho > x.rho:
                    rep.mismatches.append({**where, "kind": "monotonicity", "sizes": [x.size, y.size],
                                           "rho": [_fmt(x.rho), _fmt(y.rho)]})
            if lam == 3:
                pairs += _f3_neighbourhood(n, members, rep)
    rep.summary["f3PairsChecked"] = pairs


def _f3_neighbourhood(n: int, members: tuple[_Member, ...], rep: SweepReport) -> int:
    """F3(k) sits strictly between F1(k, a=1) and F1(k, a=2) in size, with
    the same remoteness as the former and larger remoteness than the latter."""
    index = {x.params: i for i, x in enumerate(members)}
    checked = 0
    for i, x in enumerate(members):
        p = x.params
        if p.family is not LambdaFamily.F3:
            continue
        k = p.k
        try:
            low = LambdaPcParams(LambdaFamily.F1, 3, k, 1, n - 4 * k - 1)
            high = LambdaPcParams(LambdaFamily.F1, 3, k, 2, n - 4 * k - 2)
        except FamilyError:
            rep.mismatches.append({"n": n, "k": k, "kind": "F3 neighbours missing"})
            continue
        checked += 1
        il, ih = index.get(low), index.get(high)
        if il is None or ih is None or (il, ih) != (i - 1, i + 1):
            rep.mismatches.append({"n": n, "k": k, "kind": "F3 size order",
                                   "positions": [il, i, ih]})
            continue
        lo_m, hi_m = members[il], members[ih]
        if not (lo_m.rho == x.rho > hi_m.rho):
            rep.mismatches.append({"n": n, "k": k, "kind": "F3 remoteness",
                                   "rho": [_fmt(lo_m.rho), _fmt(x.rho), _fmt(hi_m.rho)]})
    return checked


def _addition_violations(g: Graph, r: Fraction) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.non_edges() if not remoteness(g.add_edge(u, v))[0] < r]


def _edge_addition(lim: SweepLimits, rep: SweepReport) -> None:
    additions = 0
    for kappa in range(1, (lim.kappa_max or 3) + 1):
        for n in range(min_kappa_order(kappa), lim.n_max + 1):
            for x in _kappa_data(n, kappa)[0]:
                g = kappa_pc_graph(x.params)
                rep.items_checked += 1
                additions += comb(n, 2) - g.m
                bad = _addition_violations(g, x.rho)
                if bad:
                    rep.mismatches.append({"n": n, "kappa": kappa, "size": x.size, "edges": bad})
    for lam in (2, 3):
        for n in range(min_lambda_order(lam), lim.n_max + 1):
            for x in _lambda_data(n, lam)[0]:
                g = lambda_pc_graph(x.params)
                rep.items_checked += 1
                additions += comb(n, 2) - g.m
                bad = _addition_violations(g, x.rho)
                if bad:
                    rep.mismatches.append({"n": n, "lambda": lam, "member": x.params.label(),
                                           "edges": bad})
    rep.summary["edgeAdditions"] = additions


_CHECKS = {
    SweepCheck.KAPPA_FORMULA: _kappa_formula,
    SweepCheck.LAMBDA_SHARPNESS: _lambda_sharpness,
    SweepCheck.EPSILON_WINDOW: _epsilon_window,
    SweepCheck.LAMBDA_DOMINATION: _lambda_domination,
    SweepCheck.BPK_EQUALITY: _bpk_equality,
    SweepCheck.KAPPA_STRUCTURE: _kappa_structure,
    SweepCheck.LAMBDA_STRUCTURE: _lambda_structure,
    SweepCheck.EDGE_ADDITION: _edge_addition,
}


def sweep_consistency(check_id: str | SweepCheck, limits: SweepLimits | None = None) -> SweepReport:
    """Run one constructive sweep; the report lists every mismatch found."""
    check = resolve_check(check_id)
    lim = limits or SweepLimits.default(check)
    rep = SweepReport(check, lim)
    _CHECKS[check](lim, rep)
    return rep
