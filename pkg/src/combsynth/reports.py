"""Non-inhabitation reports: one entry per uninhabited nonterminal met
during the search, distinguishing targets with no usable combinator from
unproductive cycles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .grammar import productive_nonterminals
from .inhabitation import DebugTrace, Failure
from .types import OrganizedType


class Reason(str, Enum):
    NO_USABLE_COMBINATOR = "NoUsableCombinator"
    UNPRODUCTIVE_CYCLE = "UnproductiveCycle"


@dataclass(frozen=True)
class ReportEntry:
    type: OrganizedType
    reason: Reason


@dataclass(frozen=True)
class Report:
    entries: tuple[ReportEntry, ...]


def report_for(trace: DebugTrace) -> Report:
    """Entries in step order; NoUsableCombinator takes precedence over
    UnproductiveCycle for a failed step's target."""
    productive = productive_nonterminals(trace.final)
    entries = []
    for step in trace.steps:
        nt = step.processed_target
        if nt in productive:
            continue
        if step.failure is Failure.NO_USABLE_COMBINATOR:
            entries.append(ReportEntry(nt, Reason.NO_USABLE_COMBINATOR))
        else:
            entries.append(ReportEntry(nt, Reason.UNPRODUCTIVE_CYCLE))
    return Report(tuple(entries))


def report_to_document(report: Report) -> dict:
    return {
        "entries": [
            {"type": str(e.type), "reason": e.reason.value}
            for e in report.entries
        ]
    }
