"""Verification report types and their JSON / CSV serialisation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..bounds import format_decimal
from .corpus import CorpusSpec


def _q(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


@dataclass
class CellResult:
    n: int
    m: int
    graphs_scanned: int
    max_rho: Fraction
    witnesses: list[str]
    witness_labeled_count: int
    bound_value: Fraction | None
    equality_holds: bool | None
    extremal_isomorphic_to_pk: bool | None
    uniqueness_claimed: bool = False
    reference: str | None = None

    def to_json(self, precision: int = 6) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "graphsScanned": self.graphs_scanned,
            "maxRho": _q(self.max_rho),
            "maxRhoDecimal": format_decimal(self.max_rho, precision),
            "witnesses": self.witnesses,
            "witnessLabeledCount": self.witness_labeled_count,
            "boundValue": _q(self.bound_value),
            "equalityHolds": self.equality_holds,
            "extremalIsomorphicToPK": self.extremal_isomorphic_to_pk,
            "uniquenessClaimed": self.uniqueness_claimed,
            "reference": self.reference,
        }


@dataclass
class VerificationReport:
    corpus: CorpusSpec
    theorem_id: str
    parameter: int | None
    graphs_scanned: int
    graphs_excluded: int
    per_cell: list[CellResult]
    violations: list[dict] = field(default_factory=list)
    uniqueness_failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.uniqueness_failures

    def cell(self, n: int, m: int) -> CellResult:
        for c in self.per_cell:
            if (c.n, c.m) == (n, m):
                return c
        raise KeyError((n, m))

    def max_rho_by_order(self) -> dict[int, tuple[Fraction, list[str]]]:
        """Largest remoteness per order with the witnesses of every cell attaining it."""
        out: dict[int, tuple[Fraction, list[str]]] = {}
        for c in self.per_cell:
            best = out.get(c.n)
            if best is None or c.max_rho > best[0]:
                out[c.n] = (c.max_rho, list(c.witnesses))
            elif c.max_rho == best[0]:
                out[c.n] = (best[0], sorted(set(best[1]) | set(c.witnesses)))
        return out

    def to_json(self, precision: int = 6) -> dict:
        return {
            "corpus": self.corpus.to_json(),
            "theoremId": self.theorem_id,
            "parameter": self.parameter,
            "graphsScanned": self.graphs_scanned,
            "graphsExcluded": self.graphs_excluded,
            "perCell": [c.to_json(precision) for c in self.per_cell],
            "violations": self.violations,
            "uniquenessFailures": self.uniqueness_failures,
        }

    def dumps(self, precision: int = 6) -> str:
        return json.dumps(self.to_json(precision), indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "maxRho", "boundValue", "equal", "witnessCount"])
        for c in self.per_cell:
            eq = "" if c.equality_holds is None else str(c.equality_holds).lower()
            w.writerow([c.n, c.m, str(c.max_rho), _q(c.bound_value) or "", eq, len(c.witnesses)])
        return buf.getvalue()
