"""Exhaustive, corpus and constructive verification of the remoteness bounds."""

from .corpus import CorpusSpec, FilterKind, GraphFilter
from .report import CellResult, VerificationReport
from .sweeps import SweepCheck, SweepLimits, SweepReport, sweep_consistency
from .theorems import THEOREMS, check_uniqueness_window, verify_theorem

__all__ = [
    "THEOREMS", "CellResult", "CorpusSpec", "FilterKind", "GraphFilter", "SweepCheck",
    "SweepLimits", "SweepReport", "VerificationReport", "check_uniqueness_window",
    "sweep_consistency", "verify_theorem",
]
