"""Reading and writing scene, question, and suite-manifest files.

One JSON document per scene, field names matching the domain types, times
as decimal seconds, and a format_version field on every document (see
docs/scene-format.md). Serialization is canonical: fixed key order, two-space
indent, trailing newline, so identical data always yields identical bytes.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from ..core.errors import ParseError, ValidationError
from ..core.types import TimeWindow
from .model import (
    SCENE_FORMAT_VERSION,
    AudioEvent,
    Granularity,
    QuestionItem,
    Scene,
    SpeechSegment,
    VisualFact,
)

QUESTIONS_FORMAT_VERSION = 1
MANIFEST_FORMAT_VERSION = 1


def render_document(payload: dict[str, Any]) -> str:
    """Canonical on-disk form of one JSON document."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: Path, content: str) -> None:
    """Write via temp file + rename so readers never see a partial document."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


def _load_json(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}") from None
    if not text.strip():
        raise ParseError(f"empty document: {path}", line=1)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(payload, dict):
        raise ParseError(f"top-level value in {path} must be an object", line=1)
    return payload


def _require(payload: dict[str, Any], field: str, kind: type | tuple[type, ...]) -> Any:
    if field not in payload:
        raise ParseError(f"missing required field {field!r}", field=field)
    value = payload[field]
    if not isinstance(value, kind):
        raise ParseError(
            f"field {field!r} has wrong type {type(value).__name__}", field=field
        )
    return value


def _parse_window(payload: Any, field: str) -> TimeWindow:
    if not isinstance(payload, dict):
        raise ParseError(f"field {field!r} must be an object", field=field)
    start = _require(payload, "start_s", (int, float))
    end = _require(payload, "end_s", (int, float))
    try:
        return TimeWindow(float(start), float(end))
    except ValueError as exc:
        raise ValidationError(str(exc), field=field) from exc


def parse_scene_payload(payload: dict[str, Any]) -> Scene:
    version = _require(payload, "format_version", int)
    if version != SCENE_FORMAT_VERSION:
        raise ParseError(
            f"unsupported scene format_version {version}", field="format_version"
        )
    events = []
    for i, raw in enumerate(_require(payload, "audio_events", list)):
        events.append(
            AudioEvent(
                id=_require(raw, "id", str),
                label=_require(raw, "label", str),
                description=_require(raw, "description", str),
                window=_parse_window(raw.get("window"), f"audio_events[{i}].window"),
            )
        )
    segments = []
    for i, raw in enumerate(_require(payload, "speech_segments", list)):
        segments.append(
            SpeechSegment(
                id=_require(raw, "id", str),
                window=_parse_window(raw.get("window"), f"speech_segments[{i}].window"),
                transcript=_require(raw, "transcript", str),
            )
        )
    facts = []
    for i, raw in enumerate(_require(payload, "visual_facts", list)):
        granularity_raw = _require(raw, "granularity", str)
        try:
            granularity = Granularity(granularity_raw)
        except ValueError:
            raise ValidationError(
                f"unknown granularity {granularity_raw!r}",
                field=f"visual_facts[{i}].granularity",
            ) from None
        facts.append(
            VisualFact(
                id=_require(raw, "id", str),
                window=_parse_window(raw.get("window"), f"visual_facts[{i}].window"),
                statement=_require(raw, "statement", str),
                granularity=granularity,
                min_fps=float(_require(raw, "min_fps", (int, float))),
                max_query_window_s=float(_require(raw, "max_query_window_s", (int, float))),
            )
        )
    return Scene(
        id=_require(payload, "id", str),
        duration_s=float(_require(payload, "duration_s", (int, float))),
        audio_events=tuple(events),
        speech_segments=tuple(segments),
        visual_facts=tuple(facts),
        global_audio_summary=_require(payload, "global_audio_summary", str),
        global_visual_summary=_require(payload, "global_visual_summary", str),
    )


def load_scene(path: str | Path) -> Scene:
    """Load and validate one scene document.

    Raises ParseError for malformed documents and ValidationError when the
    document parses but violates a scene invariant.
    """
    return parse_scene_payload(_load_json(Path(path)))


def save_scene(scene: Scene, path: str | Path) -> None:
    write_atomic(Path(path), render_document(scene.to_payload()))


def parse_question_payload(payload: dict[str, Any]) -> QuestionItem:
    choices = _require(payload, "choices", list)
    required = _require(payload, "required_fact_ids", list)
    return QuestionItem(
        id=_require(payload, "id", str),
        scene_id=_require(payload, "scene_id", str),
        question=_require(payload, "question", str),
        choices=tuple(str(c) for c in choices),
        answer_index=_require(payload, "answer_index", int),
        required_fact_ids=tuple(str(r) for r in required),
        requires_cross_modal=bool(payload.get("requires_cross_modal", False)),
    )


def questions_payload(questions: list[QuestionItem]) -> dict[str, Any]:
    return {
        "format_version": QUESTIONS_FORMAT_VERSION,
        "questions": [q.to_payload() for q in questions],
    }


def load_questions(path: str | Path) -> list[QuestionItem]:
    payload = _load_json(Path(path))
    version = _require(payload, "format_version", int)
    if version != QUESTIONS_FORMAT_VERSION:
        raise ParseError(
            f"unsupported questions format_version {version}", field="format_version"
        )
    return [parse_question_payload(raw) for raw in _require(payload, "questions", list)]


def save_questions(questions: list[QuestionItem], path: str | Path) -> None:
    write_atomic(Path(path), render_document(questions_payload(questions)))


def manifest_payload(
    suite_id: str,
    seed: int,
    n_scenes: int,
    profile_payload: dict[str, Any],
    scene_files: list[str],
    questions_file: str,
) -> dict[str, Any]:
    return {
        "format_version": MANIFEST_FORMAT_VERSION,
        "suite_id": suite_id,
        "seed": seed,
        "n_scenes": n_scenes,
        "profile": profile_payload,
        "scene_files": scene_files,
        "questions_file": questions_file,
    }


def load_manifest(path: str | Path) -> dict[str, Any]:
    payload = _load_json(Path(path))
    version = _require(payload, "format_version", int)
    if version != MANIFEST_FORMAT_VERSION:
        raise ParseError(
            f"unsupported manifest format_version {version}", field="format_version"
        )
    _require(payload, "suite_id", str)
    _require(payload, "scene_files", list)
    _require(payload, "questions_file", str)
    return payload


def load_suite(suite_dir: str | Path) -> tuple[dict[str, Any], list[Scene], list[QuestionItem]]:
    """Load a generated suite directory: manifest, scenes, questions."""
    suite_dir = Path(suite_dir)
    manifest = load_manifest(suite_dir / "manifest.json")
    scenes = [load_scene(suite_dir / rel) for rel in manifest["scene_files"]]
    questions = load_questions(suite_dir / manifest["questions_file"])
    return manifest, scenes, questions
