"""Deterministic simulated audio-video world: model, files, generator, oracle."""

from .generator import GeneratorProfile, generate_suite, render_suite_files, suite_id_for
from .io import (
    load_manifest,
    load_questions,
    load_scene,
    load_suite,
    save_questions,
    save_scene,
)
from .model import (
    AudioEvent,
    Granularity,
    QuestionItem,
    Scene,
    SpeechSegment,
    VisualFact,
    validate_question_against_scene,
)
from .oracle import oracle_answer

__all__ = [
    "AudioEvent",
    "GeneratorProfile",
    "Granularity",
    "QuestionItem",
    "Scene",
    "SpeechSegment",
    "VisualFact",
    "generate_suite",
    "load_manifest",
    "load_questions",
    "load_scene",
    "load_suite",
    "oracle_answer",
    "render_suite_files",
    "save_questions",
    "save_scene",
    "suite_id_for",
    "validate_question_against_scene",
]
