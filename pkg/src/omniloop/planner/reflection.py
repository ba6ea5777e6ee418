"""Cross-modal consistency check run after every observation."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..core.types import AUDIO_KINDS, VIDEO_KINDS, Observation, Query
from ..tools.retrieval import RetrievalConfig, default_retrieval_config
from .base import ReflectionNote
from .scoring import supported_choice

if TYPE_CHECKING:
    from ..loop.memory import Memory


def _modality(observation: Observation) -> str | None:
    if observation.kind in VIDEO_KINDS:
        return "video"
    if observation.kind in AUDIO_KINDS:
        return "audio"
    return None


def reflect(
    query: Query,
    memory: "Memory",
    latest: Observation,
    config: RetrievalConfig | None = None,
) -> ReflectionNote:
    """Assess all evidence gathered so far, including the latest observation.

    Sufficient means exactly one choice is supported by at least one
    observation. An inconsistency is flagged when observations from different
    modalities support different choices — the signal to keep probing rather
    than answer.
    """
    config = config or default_retrieval_config()
    observations: list[tuple[int, Observation]] = [
        (entry.step, entry.observation)
        for entry in memory.entries
        if entry.observation is not None
    ]
    observations.append((len(memory.entries), latest))

    steps_by_choice: dict[int, list[int]] = {}
    modalities_by_choice: dict[int, set[str]] = {}
    for step, observation in observations:
        index = supported_choice(query.choices, observation.text, config)
        if index is None:
            continue
        steps_by_choice.setdefault(index, []).append(step)
        modality = _modality(observation)
        if modality is not None:
            modalities_by_choice.setdefault(index, set()).add(modality)

    video_backed = {i for i, mods in modalities_by_choice.items() if "video" in mods}
    audio_backed = {i for i, mods in modalities_by_choice.items() if "audio" in mods}
    inconsistency = any(a != v for a in audio_backed for v in video_backed)
    sufficient = len(steps_by_choice) == 1 and not inconsistency

    if sufficient:
        (index, steps), = steps_by_choice.items()
        note = f"choice {index} supported by steps {sorted(steps)}"
    elif inconsistency:
        note = (
            "cross-modal disagreement: audio-backed choices "
            f"{sorted(audio_backed)} vs video-backed choices {sorted(video_backed)}"
        )
    elif steps_by_choice:
        note = f"multiple choices supported: {sorted(steps_by_choice)}"
    else:
        note = "no choice supported yet"
    return ReflectionNote(
        sufficient=sufficient,
        inconsistency_detected=inconsistency,
        note=note,
    )
