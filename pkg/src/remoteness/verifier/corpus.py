"""Corpus descriptions and graph6 file loading."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterator

from ..graphcore import Graph, Graph6Error, decode_graph6, encode_graph6
from .enumeration import INTERNAL_MAX_ORDER


class CorpusError(ValueError):
    """Bad corpus description or unreadable corpus file."""


class FilterKind(Enum):
    CONNECTED = "CONNECTED"
    KAPPA = "KAPPA"
    LAMBDA = "LAMBDA"
    TRIANGLE_FREE = "TRIANGLE_FREE"


@dataclass(frozen=True)
class GraphFilter:
    kind: FilterKind
    param: int | None = None

    def __post_init__(self) -> None:
        needs = self.kind in (FilterKind.KAPPA, FilterKind.LAMBDA)
        if needs and (self.param is None or self.param < 1):
            raise CorpusError(f"{self.kind.value} filter needs a positive parameter")
        if not needs and self.param is not None:
            raise CorpusError(f"{self.kind.value} filter takes no parameter")

    def __str__(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}({self.param})"


@dataclass(frozen=True)
class CorpusSpec:
    """Either the internal labeled enumeration of order ``internal_n`` or a
    graph6 file at ``path`` (``"-"`` for standard input)."""

    internal_n: int | None = None
    path: str | None = None
    filter: GraphFilter | None = None
    size_exact: int | None = None
    size_at_least: int | None = None

    def __post_init__(self) -> None:
        if (self.internal_n is None) == (self.path is None):
            raise CorpusError("give exactly one of internal_n or path")
        if self.internal_n is not None and not 2 <= self.internal_n <= INTERNAL_MAX_ORDER:
            raise CorpusError(f"internal enumeration needs 2 <= n <= {INTERNAL_MAX_ORDER}")
        if self.size_exact is not None and self.size_at_least is not None:
            raise CorpusError("give at most one size selector")

    def with_filter(self, f: GraphFilter) -> CorpusSpec:
        return CorpusSpec(self.internal_n, self.path, f, self.size_exact, self.size_at_least)

    def to_json(self) -> dict:
        sel = None
        if self.size_exact is not None:
            sel = {"exact": self.size_exact}
        elif self.size_at_least is not None:
            sel = {"atLeast": self.size_at_least}
        src = {"internal": self.internal_n} if self.internal_n is not None else {"graph6File": self.path}
        return {"source": src, "filter": str(self.filter) if self.filter else None, "sizeSelector": sel}


def _read_lines(handle: IO[bytes]) -> Iterator[tuple[int, Graph]]:
    for lineno, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, decode_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def load_graph6(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line number, graph)`` for each record; blank lines are skipped."""
    if str(path) == "-":
        yield from _read_lines(sys.stdin.buffer)
        return
    try:
        handle = open(path, "rb")
    except OSError as exc:
        raise CorpusError(f"cannot open {path}: {exc}") from None
    with handle:
        yield from _read_lines(handle)


def write_graph6(graphs, path: str | Path) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + b"\n")
