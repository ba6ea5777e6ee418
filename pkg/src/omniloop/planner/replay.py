"""Replay planner: a deterministic test double that follows a fixed script."""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from ..core.errors import ScriptExhaustedError
from ..core.types import Query
from .base import PlannerDecision

if TYPE_CHECKING:
    from ..loop.episode import Trace
    from ..loop.memory import Memory


def replay_decide(script: Sequence[PlannerDecision], step: int) -> PlannerDecision:
    """Return script[step] verbatim; exhausting the script is a planner failure."""
    if step >= len(script):
        raise ScriptExhaustedError(
            f"replay script exhausted: step {step} of {len(script)} decisions"
        )
    return script[step]


class ReplayPlanner:
    kind = "replay"

    def __init__(self, script: Sequence[PlannerDecision]):
        self.script = list(script)

    @classmethod
    def from_trace(cls, trace: "Trace") -> "ReplayPlanner":
        """Replay the decisions of a previously recorded episode."""
        return cls([entry.decision for entry in trace.entries])

    def decide(self, query: Query, memory: "Memory") -> PlannerDecision:
        return replay_decide(self.script, len(memory.entries))
