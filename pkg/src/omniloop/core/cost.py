"""Token and latency accounting.

Latency is always the simulated quantity derived from the cost model, never
wall-clock, so every benchmark report is reproducible byte for byte. All
token estimates round up: cost must never under-report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .types import ActionKind, TimeWindow

DEFAULT_TOKENS_PER_FRAME = 100
DEFAULT_AUDIO_TOKENS_PER_SECOND = 25
DEFAULT_TEXT_CHARS_PER_TOKEN = 4
DEFAULT_PER_TOKEN_LATENCY_US = 50

# Base per-call latency, in ms. Video tools are slower than audio tools,
# reflecting their heavier backends; ANSWER is synthesis only.
DEFAULT_BASE_LATENCY_MS: dict[ActionKind, int] = {
    ActionKind.GLOBAL_QA: 800,
    ActionKind.CLIP_QA: 600,
    ActionKind.ASR: 400,
    ActionKind.GLOBAL_CAPTION: 400,
    ActionKind.AUDIO_QA: 400,
    ActionKind.EVENT_LIST: 300,
    ActionKind.EVENT_LOCATION: 300,
    ActionKind.ANSWER: 0,
}


@dataclass(frozen=True)
class CostModel:
    """Rates that turn media spans and text into token counts and latency."""

    tokens_per_frame: int = DEFAULT_TOKENS_PER_FRAME
    audio_tokens_per_second: int = DEFAULT_AUDIO_TOKENS_PER_SECOND
    text_chars_per_token: int = DEFAULT_TEXT_CHARS_PER_TOKEN
    per_tool_base_latency_ms: dict[ActionKind, int] = field(
        default_factory=lambda: dict(DEFAULT_BASE_LATENCY_MS)
    )
    per_token_latency_us: int = DEFAULT_PER_TOKEN_LATENCY_US

    def __post_init__(self) -> None:
        for name in (
            "tokens_per_frame",
            "audio_tokens_per_second",
            "text_chars_per_token",
            "per_token_latency_us",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"CostModel.{name} must be strictly positive")

    def base_latency_ms(self, kind: ActionKind) -> int:
        return self.per_tool_base_latency_ms.get(kind, 0)

    def text_tokens(self, text: str) -> int:
        return math.ceil(len(text) / self.text_chars_per_token)

    def latency_ms(self, kind: ActionKind, total_tokens: int) -> int:
        """Simulated latency: per-tool base plus a per-token term, rounded up."""
        per_token = -(-(total_tokens * self.per_token_latency_us) // 1000)
        return self.base_latency_ms(kind) + per_token

    def to_payload(self) -> dict:
        return {
            "tokens_per_frame": self.tokens_per_frame,
            "audio_tokens_per_second": self.audio_tokens_per_second,
            "text_chars_per_token": self.text_chars_per_token,
            "per_tool_base_latency_ms": {
                kind.value: self.per_tool_base_latency_ms[kind]
                for kind in ActionKind
                if kind in self.per_tool_base_latency_ms
            },
            "per_token_latency_us": self.per_token_latency_us,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> CostModel:
        return cls(
            tokens_per_frame=int(payload["tokens_per_frame"]),
            audio_tokens_per_second=int(payload["audio_tokens_per_second"]),
            text_chars_per_token=int(payload["text_chars_per_token"]),
            per_tool_base_latency_ms={
                ActionKind(k): int(v) for k, v in payload["per_tool_base_latency_ms"].items()
            },
            per_token_latency_us=int(payload["per_token_latency_us"]),
        )


def estimate_visual_tokens(fps: float, window: TimeWindow, model: CostModel) -> int:
    """Token cost of sampling a window at `fps`: ceil(fps * duration) frames."""
    if fps <= 0:
        raise ValueError(f"fps must be positive, got {fps}")
    frames = math.ceil(fps * window.duration())
    return frames * model.tokens_per_frame


def estimate_audio_tokens(window: TimeWindow, model: CostModel) -> int:
    """Token cost of ingesting a window of audio."""
    return math.ceil(window.duration() * model.audio_tokens_per_second)
