"""Ground-truth model of a simulated audio-video scene.

A Scene is the world the mock tools answer from: timestamped sound events,
timestamped speech, and visual facts gated by granularity. FINE facts are
retrievable only under high-FPS inspection of a short window; COARSE facts
are visible to sparse global sampling. That gate is what makes cheap global
passes lossy and forces localize-then-inspect behavior.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..core.errors import ValidationError
from ..core.types import Query, TimeWindow

SCENE_FORMAT_VERSION = 1

# Granularity gate thresholds: FINE facts need at least this sampling rate
# and at most this query-window length, which separates the global pass
# (2 fps, full duration) from clip inspection (5 fps, short window).
FINE_MIN_FPS_FLOOR = 3
FINE_MAX_QUERY_WINDOW_CAP_S = 30.0
COARSE_MAX_MIN_FPS = 2


class Granularity(str, Enum):
    COARSE = "COARSE"
    FINE = "FINE"


@dataclass(frozen=True)
class AudioEvent:
    """A detectable sound event ("dog barking") with its time window."""

    id: str
    label: str
    description: str
    window: TimeWindow

    def __post_init__(self) -> None:
        if not self.label:
            raise ValidationError("audio event label must be non-empty", field="label")

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "label": self.label,
            "description": self.description,
            "window": self.window.to_payload(),
        }


@dataclass(frozen=True)
class SpeechSegment:
    """One stretch of transcribed speech."""

    id: str
    window: TimeWindow
    transcript: str

    def __post_init__(self) -> None:
        if not self.transcript:
            raise ValidationError("speech transcript must be non-empty", field="transcript")

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "window": self.window.to_payload(),
            "transcript": self.transcript,
        }


@dataclass(frozen=True)
class VisualFact:
    """Something visible in a time window, gated by sampling granularity."""

    id: str
    window: TimeWindow
    statement: str
    granularity: Granularity
    min_fps: float
    max_query_window_s: float

    def __post_init__(self) -> None:
        if not self.statement:
            raise ValidationError("visual fact statement must be non-empty", field="statement")
        if self.granularity is Granularity.FINE:
            if self.min_fps < FINE_MIN_FPS_FLOOR:
                raise ValidationError(
                    f"FINE fact {self.id}: min_fps must be >= {FINE_MIN_FPS_FLOOR}",
                    field="min_fps",
                )
            if self.max_query_window_s > FINE_MAX_QUERY_WINDOW_CAP_S:
                raise ValidationError(
                    f"FINE fact {self.id}: max_query_window_s must be <= "
                    f"{FINE_MAX_QUERY_WINDOW_CAP_S}",
                    field="max_query_window_s",
                )
        elif self.min_fps > COARSE_MAX_MIN_FPS:
            raise ValidationError(
                f"COARSE fact {self.id}: min_fps must be <= {COARSE_MAX_MIN_FPS}",
                field="min_fps",
            )

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "window": self.window.to_payload(),
            "statement": self.statement,
            "granularity": self.granularity.value,
            "min_fps": self.min_fps,
            "max_query_window_s": self.max_query_window_s,
        }


@dataclass(frozen=True)
class Scene:
    """The full ground truth for one simulated clip."""

    id: str
    duration_s: float
    audio_events: tuple[AudioEvent, ...]
    speech_segments: tuple[SpeechSegment, ...]
    visual_facts: tuple[VisualFact, ...]
    global_audio_summary: str
    global_visual_summary: str

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if not self.id:
            raise ValidationError("scene id must be non-empty", field="id")
        if self.duration_s <= 0:
            raise ValidationError("duration_s must be positive", field="duration_s")
        for name, items in (
            ("audio_events", self.audio_events),
            ("speech_segments", self.speech_segments),
            ("visual_facts", self.visual_facts),
        ):
            for item in items:
                if not item.window.in_range(self.duration_s):
                    raise ValidationError(
                        f"{name}[{item.id}] window {item.window.label()} lies outside "
                        f"[0, {self.duration_s}]",
                        field=f"{name}.window",
                    )
        starts = [e.window.start_s for e in self.audio_events]
        if starts != sorted(starts):
            raise ValidationError(
                "audio_events must be sorted ascending by window start", field="audio_events"
            )
        seen: set[str] = set()
        for item in (*self.audio_events, *self.speech_segments, *self.visual_facts):
            if item.id in seen:
                raise ValidationError(f"duplicate annotation id {item.id!r}", field="id")
            seen.add(item.id)
        for fact in self.visual_facts:
            if (
                fact.granularity is Granularity.COARSE
                and fact.max_query_window_s != self.duration_s
            ):
                raise ValidationError(
                    f"COARSE fact {fact.id}: max_query_window_s must equal the scene "
                    f"duration {self.duration_s}",
                    field="max_query_window_s",
                )

    def annotation_by_id(self, annotation_id: str) -> AudioEvent | SpeechSegment | VisualFact | None:
        for item in (*self.audio_events, *self.speech_segments, *self.visual_facts):
            if item.id == annotation_id:
                return item
        return None

    def fine_facts(self) -> tuple[VisualFact, ...]:
        return tuple(f for f in self.visual_facts if f.granularity is Granularity.FINE)

    def coarse_facts(self) -> tuple[VisualFact, ...]:
        return tuple(f for f in self.visual_facts if f.granularity is Granularity.COARSE)

    def full_window(self) -> TimeWindow:
        return TimeWindow(0.0, self.duration_s)

    def to_payload(self) -> dict[str, Any]:
        return {
            "format_version": SCENE_FORMAT_VERSION,
            "id": self.id,
            "duration_s": self.duration_s,
            "audio_events": [e.to_payload() for e in self.audio_events],
            "speech_segments": [s.to_payload() for s in self.speech_segments],
            "visual_facts": [f.to_payload() for f in self.visual_facts],
            "global_audio_summary": self.global_audio_summary,
            "global_visual_summary": self.global_visual_summary,
        }


@dataclass(frozen=True)
class QuestionItem:
    """A four-choice benchmark question with its answer key and provenance.

    `required_fact_ids` names the scene annotations a correct answer rests
    on; the oracle resolves the key from them alone.
    """

    id: str
    scene_id: str
    question: str
    choices: tuple[str, ...]
    answer_index: int
    required_fact_ids: tuple[str, ...]
    requires_cross_modal: bool = False

    def __post_init__(self) -> None:
        if not (0 <= self.answer_index < len(self.choices)):
            raise ValidationError(
                f"answer_index {self.answer_index} out of range for "
                f"{len(self.choices)} choices",
                field="answer_index",
            )
        if len(set(self.choices)) != len(self.choices):
            raise ValidationError("choices must be pairwise distinct", field="choices")

    def to_query(self) -> Query:
        """The agent-facing view: question and choices, no answer key."""
        return Query(
            id=self.id,
            scene_id=self.scene_id,
            question=self.question,
            choices=self.choices,
        )

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "scene_id": self.scene_id,
            "question": self.question,
            "choices": list(self.choices),
            "answer_index": self.answer_index,
            "required_fact_ids": list(self.required_fact_ids),
            "requires_cross_modal": self.requires_cross_modal,
        }


def validate_question_against_scene(question: QuestionItem, scene: Scene) -> None:
    """Cross-checks that need both the question and its scene."""
    if question.scene_id != scene.id:
        raise ValidationError(
            f"question {question.id} references scene {question.scene_id!r}, "
            f"not {scene.id!r}",
            field="scene_id",
        )
    if question.requires_cross_modal:
        kinds = {type(scene.annotation_by_id(fid)) for fid in question.required_fact_ids}
        has_audio = AudioEvent in kinds or SpeechSegment in kinds
        has_fine = any(
            isinstance(a := scene.annotation_by_id(fid), VisualFact)
            and a.granularity is Granularity.FINE
            for fid in question.required_fact_ids
        )
        if not (has_audio and has_fine):
            raise ValidationError(
                f"cross-modal question {question.id} must reference at least one audio "
                "annotation and one FINE visual fact",
                field="required_fact_ids",
            )
