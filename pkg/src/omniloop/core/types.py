"""Domain value types shared by every other module.

All types here are immutable, so they can be shared freely across
concurrently running episodes.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, Union


class ActionKind(str, Enum):
    """The seven perception tools plus the terminal ANSWER action."""

    GLOBAL_QA = "GLOBAL_QA"
    CLIP_QA = "CLIP_QA"
    ASR = "ASR"
    GLOBAL_CAPTION = "GLOBAL_CAPTION"
    AUDIO_QA = "AUDIO_QA"
    EVENT_LIST = "EVENT_LIST"
    EVENT_LOCATION = "EVENT_LOCATION"
    ANSWER = "ANSWER"

    @property
    def tool_name(self) -> str:
        """Lowercase wire name used in tool schemas and trace files."""
        return self.value.lower()


VIDEO_KINDS = frozenset({ActionKind.GLOBAL_QA, ActionKind.CLIP_QA})
AUDIO_KINDS = frozenset(
    {
        ActionKind.ASR,
        ActionKind.GLOBAL_CAPTION,
        ActionKind.AUDIO_QA,
        ActionKind.EVENT_LIST,
        ActionKind.EVENT_LOCATION,
    }
)
TOOL_KINDS = tuple(k for k in ActionKind if k is not ActionKind.ANSWER)


@dataclass(frozen=True, order=True)
class TimeWindow:
    """Half-open-feeling closed interval of media time, in seconds.

    Construction requires a strictly positive duration. A negative start is
    tolerated here because planner padding and model-emitted arguments may
    transiently undershoot zero; every window that ends up stored in a scene
    or an observation is normalized through `clamp` first and satisfies
    0 <= start_s < end_s.
    """

    start_s: float
    end_s: float

    def __post_init__(self) -> None:
        if not (self.start_s < self.end_s):
            raise ValueError(
                f"window must have positive duration, got [{self.start_s}, {self.end_s}]"
            )

    def duration(self) -> float:
        return self.end_s - self.start_s

    def contains(self, other: TimeWindow, pad_s: float = 0.0) -> bool:
        """True if `other` lies within this window extended by `pad_s` on both sides."""
        return (self.start_s - pad_s) <= other.start_s and other.end_s <= (self.end_s + pad_s)

    def in_range(self, duration_s: float) -> bool:
        """True if the window satisfies the full invariant 0 <= start < end <= duration."""
        return 0.0 <= self.start_s < self.end_s <= duration_s

    def label(self) -> str:
        """Human-readable form used in observation text, e.g. ``[3.0–5.0]``."""
        return f"[{format_seconds(self.start_s)}–{format_seconds(self.end_s)}]"

    def to_payload(self) -> dict[str, float]:
        return {"start_s": self.start_s, "end_s": self.end_s}

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> TimeWindow:
        return cls(start_s=float(payload["start_s"]), end_s=float(payload["end_s"]))


def format_seconds(t: float) -> str:
    """Shortest round-trip decimal form of a timestamp ("3.0", "15.5")."""
    return repr(float(t))


def clamp_window(window: TimeWindow, duration_s: float) -> TimeWindow:
    """Clamp a window into [0, duration_s].

    If the clamped interval would be empty (the request lies entirely outside
    the media), fall back to the final half-second [duration_s - 0.5, duration_s]
    so callers always receive a usable window. Idempotent.
    """
    if duration_s <= 0:
        raise ValueError(f"duration_s must be positive, got {duration_s}")
    start = max(0.0, window.start_s)
    end = min(duration_s, window.end_s)
    if start >= end:
        return TimeWindow(max(0.0, duration_s - 0.5), duration_s)
    return TimeWindow(start, end)


@dataclass(frozen=True)
class TokenCost:
    """Componentwise token counts for one observation or a whole episode."""

    visual: int = 0
    audio: int = 0
    text: int = 0

    def __post_init__(self) -> None:
        for name in ("visual", "audio", "text"):
            if getattr(self, name) < 0:
                raise ValueError(f"TokenCost.{name} must be >= 0")

    def __add__(self, other: TokenCost) -> TokenCost:
        return TokenCost(
            visual=self.visual + other.visual,
            audio=self.audio + other.audio,
            text=self.text + other.text,
        )

    def total(self) -> int:
        return self.visual + self.audio + self.text

    def to_payload(self) -> dict[str, int]:
        return {"visual": self.visual, "audio": self.audio, "text": self.text}

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> TokenCost:
        return cls(
            visual=int(payload["visual"]),
            audio=int(payload["audio"]),
            text=int(payload["text"]),
        )

    @classmethod
    def zero(cls) -> TokenCost:
        return cls()


# --- Action arguments: a tagged union keyed by ActionKind -----------------


@dataclass(frozen=True)
class GlobalQAArgs:
    KIND: ClassVar[ActionKind] = ActionKind.GLOBAL_QA
    question: str

    def to_payload(self) -> dict[str, Any]:
        return {"question": self.question}


@dataclass(frozen=True)
class ClipQAArgs:
    KIND: ClassVar[ActionKind] = ActionKind.CLIP_QA
    question: str
    window: TimeWindow

    def to_payload(self) -> dict[str, Any]:
        return {"question": self.question, "window": self.window.to_payload()}


@dataclass(frozen=True)
class AsrArgs:
    KIND: ClassVar[ActionKind] = ActionKind.ASR

    def to_payload(self) -> dict[str, Any]:
        return {}


@dataclass(frozen=True)
class GlobalCaptionArgs:
    KIND: ClassVar[ActionKind] = ActionKind.GLOBAL_CAPTION

    def to_payload(self) -> dict[str, Any]:
        return {}


@dataclass(frozen=True)
class AudioQAArgs:
    KIND: ClassVar[ActionKind] = ActionKind.AUDIO_QA
    question: str

    def to_payload(self) -> dict[str, Any]:
        return {"question": self.question}


@dataclass(frozen=True)
class EventListArgs:
    KIND: ClassVar[ActionKind] = ActionKind.EVENT_LIST

    def to_payload(self) -> dict[str, Any]:
        return {}


@dataclass(frozen=True)
class EventLocationArgs:
    KIND: ClassVar[ActionKind] = ActionKind.EVENT_LOCATION
    query: str

    def to_payload(self) -> dict[str, Any]:
        return {"query": self.query}


@dataclass(frozen=True)
class AnswerArgs:
    KIND: ClassVar[ActionKind] = ActionKind.ANSWER
    answer: str

    def to_payload(self) -> dict[str, Any]:
        return {"answer": self.answer}


ActionArgs = Union[
    GlobalQAArgs,
    ClipQAArgs,
    AsrArgs,
    GlobalCaptionArgs,
    AudioQAArgs,
    EventListArgs,
    EventLocationArgs,
    AnswerArgs,
]

_ARGS_BY_KIND: dict[ActionKind, type] = {
    ActionKind.GLOBAL_QA: GlobalQAArgs,
    ActionKind.CLIP_QA: ClipQAArgs,
    ActionKind.ASR: AsrArgs,
    ActionKind.GLOBAL_CAPTION: GlobalCaptionArgs,
    ActionKind.AUDIO_QA: AudioQAArgs,
    ActionKind.EVENT_LIST: EventListArgs,
    ActionKind.EVENT_LOCATION: EventLocationArgs,
    ActionKind.ANSWER: AnswerArgs,
}


def args_class_for(kind: ActionKind) -> type:
    return _ARGS_BY_KIND[kind]


def args_from_payload(kind: ActionKind, payload: dict[str, Any]) -> ActionArgs:
    """Build typed arguments from a plain dict (trace files, wire requests)."""
    if kind is ActionKind.GLOBAL_QA:
        return GlobalQAArgs(question=str(payload["question"]))
    if kind is ActionKind.CLIP_QA:
        return ClipQAArgs(
            question=str(payload["question"]),
            window=TimeWindow.from_payload(payload["window"]),
        )
    if kind is ActionKind.ASR:
        return AsrArgs()
    if kind is ActionKind.GLOBAL_CAPTION:
        return GlobalCaptionArgs()
    if kind is ActionKind.AUDIO_QA:
        return AudioQAArgs(question=str(payload["question"]))
    if kind is ActionKind.EVENT_LIST:
        return EventListArgs()
    if kind is ActionKind.EVENT_LOCATION:
        return EventLocationArgs(query=str(payload["query"]))
    if kind is ActionKind.ANSWER:
        return AnswerArgs(answer=str(payload["answer"]))
    raise ValueError(f"unknown action kind: {kind}")


@dataclass(frozen=True)
class Observation:
    """Result of executing one tool: text payload plus accounting.

    `windows` is non-empty only for EVENT_LOCATION and ASR observations,
    which return timestamps alongside text.
    """

    kind: ActionKind
    text: str
    windows: tuple[TimeWindow, ...] = ()
    cost: TokenCost = field(default_factory=TokenCost)
    latency_ms: int = 0

    def __post_init__(self) -> None:
        if self.latency_ms < 0:
            raise ValueError("latency_ms must be >= 0")
        if self.windows and self.kind not in (ActionKind.EVENT_LOCATION, ActionKind.ASR):
            raise ValueError(f"{self.kind.value} observations must not carry windows")

    def to_payload(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "text": self.text,
            "windows": [w.to_payload() for w in self.windows],
            "cost": self.cost.to_payload(),
            "latency_ms": self.latency_ms,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> Observation:
        return cls(
            kind=ActionKind(payload["kind"]),
            text=str(payload["text"]),
            windows=tuple(TimeWindow.from_payload(w) for w in payload["windows"]),
            cost=TokenCost.from_payload(payload["cost"]),
            latency_ms=int(payload["latency_ms"]),
        )


@dataclass(frozen=True)
class Query:
    """A multiple-choice question as the agent sees it: no answer key."""

    id: str
    scene_id: str
    question: str
    choices: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.question:
            raise ValueError("question must be non-empty")

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "scene_id": self.scene_id,
            "question": self.question,
            "choices": list(self.choices),
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> Query:
        return cls(
            id=str(payload["id"]),
            scene_id=str(payload["scene_id"]),
            question=str(payload["question"]),
            choices=tuple(str(c) for c in payload["choices"]),
        )


def derive_seed(base_seed: int, *parts: object) -> int:
    """Derive a stable 64-bit sub-seed from a base seed and context labels.

    Used wherever a component needs its own deterministic stream (per-episode
    planner randomness, retry jitter) without sharing state.
    """
    h = hashlib.sha256()
    h.update(str(base_seed).encode("utf-8"))
    for part in parts:
        h.update(b"\x1f")
        h.update(str(part).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")
