"""Append-only episodic memory."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from ..core.types import ActionKind, Observation
from ..planner.base import PlannerDecision, ReflectionNote


@dataclass(frozen=True)
class MemoryEntry:
    """One completed step: the decision, its observation, and the reflection.

    ANSWER entries carry no observation (the action is terminal) and no
    reflection (there is nothing new to reflect on).
    """

    step: int
    decision: PlannerDecision
    observation: Observation | None
    reflection: ReflectionNote | None

    def __post_init__(self) -> None:
        is_answer = self.decision.action is ActionKind.ANSWER
        if is_answer and self.observation is not None:
            raise ValueError("ANSWER entries must not carry an observation")
        if not is_answer and self.observation is None:
            raise ValueError("tool entries must carry an observation")

    def to_payload(self) -> dict[str, Any]:
        return {
            "step": self.step,
            "decision": self.decision.to_payload(),
            "observation": self.observation.to_payload() if self.observation else None,
            "reflection": self.reflection.to_payload() if self.reflection else None,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> MemoryEntry:
        return cls(
            step=int(payload["step"]),
            decision=PlannerDecision.from_payload(payload["decision"]),
            observation=(
                Observation.from_payload(payload["observation"])
                if payload.get("observation") is not None
                else None
            ),
            reflection=(
                ReflectionNote.from_payload(payload["reflection"])
                if payload.get("reflection") is not None
                else None
            ),
        )


class Memory:
    """Strictly growing sequence of entries; entries are never mutated or removed."""

    def __init__(self) -> None:
        self._entries: list[MemoryEntry] = []

    @property
    def entries(self) -> tuple[MemoryEntry, ...]:
        return tuple(self._entries)

    def append(self, entry: MemoryEntry) -> None:
        if entry.step != len(self._entries):
            raise ValueError(
                f"entry step {entry.step} does not extend memory of length "
                f"{len(self._entries)}"
            )
        self._entries.append(entry)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[MemoryEntry]:
        return iter(self._entries)
