"""Planner-facing types and the planner protocol."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Protocol, runtime_checkable

from ..core.types import ActionArgs, ActionKind, Query, args_from_payload

if TYPE_CHECKING:
    from ..loop.memory import Memory


@dataclass(frozen=True)
class PlannerDecision:
    """One planning step: the chosen action, its arguments, and a rationale."""

    action: ActionKind
    args: ActionArgs
    rationale: str = ""

    def __post_init__(self) -> None:
        if self.args.KIND is not self.action:
            raise ValueError(
                f"args tagged {self.args.KIND.value} do not match action {self.action.value}"
            )

    def to_payload(self) -> dict[str, Any]:
        return {
            "action": self.action.value,
            "args": self.args.to_payload(),
            "rationale": self.rationale,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> PlannerDecision:
        kind = ActionKind(payload["action"])
        return cls(
            action=kind,
            args=args_from_payload(kind, payload["args"]),
            rationale=str(payload.get("rationale", "")),
        )


@dataclass(frozen=True)
class ReflectionNote:
    """Outcome of the post-observation consistency check."""

    sufficient: bool
    inconsistency_detected: bool
    note: str

    def to_payload(self) -> dict[str, Any]:
        return {
            "sufficient": self.sufficient,
            "inconsistency_detected": self.inconsistency_detected,
            "note": self.note,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> ReflectionNote:
        return cls(
            sufficient=bool(payload["sufficient"]),
            inconsistency_detected=bool(payload["inconsistency_detected"]),
            note=str(payload["note"]),
        )


@runtime_checkable
class Planner(Protocol):
    """Anything that can drive an episode: one instance per episode."""

    kind: str

    def decide(self, query: Query, memory: "Memory") -> PlannerDecision: ...
