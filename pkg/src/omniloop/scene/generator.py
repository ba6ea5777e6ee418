"""Seeded scene/question suite generator with self-verified answer keys.

Determinism contract: one 64-bit seed drives a family of counter-based
Philox streams, keyed (seed, scene_index) per scene and (seed, 2^64-1) for
suite-level resource assignment. Identical (seed, n_scenes, profile) yields
byte-identical output on any platform; there is no global or OS randomness.

Every cross-modal question is checked before emission: the answer key must
survive the oracle, the localize-then-inspect tool chain must actually
surface the supporting fine fact, and no coarse statement or summary may
contain the correct choice's discriminating tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from ..core.errors import GenerationError, OracleError
from ..core.types import TimeWindow, clamp_window
from ..tools.retrieval import RetrievalConfig, default_retrieval_config, token_set
from . import vocab
from .io import manifest_payload, questions_payload, render_document
from .model import (
    AudioEvent,
    Granularity,
    QuestionItem,
    Scene,
    SpeechSegment,
    VisualFact,
)
from .oracle import oracle_answer

_SEED_MASK = (1 << 64) - 1
_SUITE_STREAM = _SEED_MASK  # reserved stream index for cross-scene draws


@dataclass(frozen=True)
class GeneratorProfile:
    """Shape of a generated suite; the defaults mirror short-clip benchmarks."""

    duration_choices: tuple[float, ...] = (30.0, 60.0)
    n_events_range: tuple[int, int] = (2, 4)
    event_duration_range_s: tuple[float, float] = (2.0, 6.0)
    min_event_gap_s: float = 2.0
    n_coarse_range: tuple[int, int] = (1, 2)
    n_speech_range: tuple[int, int] = (0, 2)
    fine_min_fps_choices: tuple[int, ...] = (3, 4, 5)
    fine_max_window_choices: tuple[float, ...] = (15.0, 20.0, 25.0)
    choices_per_question: int = 4
    include_unimodal_controls: bool = True
    edge_margin_s: float = 0.5

    def to_payload(self) -> dict[str, Any]:
        return {
            "duration_choices": list(self.duration_choices),
            "n_events_range": list(self.n_events_range),
            "event_duration_range_s": list(self.event_duration_range_s),
            "min_event_gap_s": self.min_event_gap_s,
            "n_coarse_range": list(self.n_coarse_range),
            "n_speech_range": list(self.n_speech_range),
            "fine_min_fps_choices": list(self.fine_min_fps_choices),
            "fine_max_window_choices": list(self.fine_max_window_choices),
            "choices_per_question": self.choices_per_question,
            "include_unimodal_controls": self.include_unimodal_controls,
            "edge_margin_s": self.edge_margin_s,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> GeneratorProfile:
        defaults = cls()
        known = set(defaults.to_payload())
        unknown = set(payload) - known
        if unknown:
            raise GenerationError(f"unknown profile keys: {sorted(unknown)}")
        merged = defaults.to_payload() | payload
        return cls(
            duration_choices=tuple(float(d) for d in merged["duration_choices"]),
            n_events_range=tuple(int(v) for v in merged["n_events_range"]),
            event_duration_range_s=tuple(float(v) for v in merged["event_duration_range_s"]),
            min_event_gap_s=float(merged["min_event_gap_s"]),
            n_coarse_range=tuple(int(v) for v in merged["n_coarse_range"]),
            n_speech_range=tuple(int(v) for v in merged["n_speech_range"]),
            fine_min_fps_choices=tuple(int(v) for v in merged["fine_min_fps_choices"]),
            fine_max_window_choices=tuple(float(v) for v in merged["fine_max_window_choices"]),
            choices_per_question=int(merged["choices_per_question"]),
            include_unimodal_controls=bool(merged["include_unimodal_controls"]),
            edge_margin_s=float(merged["edge_margin_s"]),
        )


def _stream(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed & _SEED_MASK, index & _SEED_MASK], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _tenths(value_s: float) -> int:
    return int(round(value_s * 10))


def _seconds(tenths: int) -> float:
    return round(tenths / 10.0, 1)


def _int_between(rng: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer in [lo, hi], inclusive."""
    return int(rng.integers(lo, hi + 1))


@dataclass(frozen=True)
class _SceneDraft:
    scene: Scene
    event_fine_ids: tuple[tuple[str, str, str], ...]  # (event_id, fine_id, subject)
    coarse_nouns: tuple[tuple[str, str], ...]  # (coarse_id, noun)


def _place_windows(
    rng: np.random.Generator,
    duration_t: int,
    lengths_t: list[int],
    gap_t: int,
    margin_t: int,
) -> list[tuple[int, int]]:
    """Place non-overlapping windows with at least `gap_t` between them."""
    n = len(lengths_t)
    slack = duration_t - 2 * margin_t - sum(lengths_t) - gap_t * (n - 1)
    if slack < 0:
        raise GenerationError(
            f"{n} events totalling {_seconds(sum(lengths_t))} s with "
            f"{_seconds(gap_t)} s gaps do not fit in {_seconds(duration_t)} s"
        )
    offsets = np.sort(rng.integers(0, slack + 1, size=n))
    windows = []
    cursor = margin_t
    for i, length in enumerate(lengths_t):
        start = cursor + int(offsets[i])
        windows.append((start, start + length))
        cursor = start + length + gap_t - int(offsets[i])
    return windows


def _build_scene(
    seed: int,
    index: int,
    profile: GeneratorProfile,
    fine_slots: Iterator[tuple[str, str]],
    coarse_slots: Iterator[tuple[str, str]],
) -> _SceneDraft:
    rng = _stream(seed, index)
    scene_id = f"sc-{seed:x}-{index:03d}"

    duration = float(profile.duration_choices[_int_between(rng, 0, len(profile.duration_choices) - 1)])
    duration_t = _tenths(duration)
    margin_t = _tenths(profile.edge_margin_s)
    gap_t = _tenths(profile.min_event_gap_s)

    n_events = _int_between(rng, *profile.n_events_range)
    lo_t, hi_t = (_tenths(v) for v in profile.event_duration_range_s)
    lengths = [_int_between(rng, lo_t, hi_t) for _ in range(n_events)]
    placements = _place_windows(rng, duration_t, lengths, gap_t, margin_t)

    label_indices = rng.choice(len(vocab.EVENT_POOL), size=n_events, replace=False)
    events: list[AudioEvent] = []
    fine_facts: list[VisualFact] = []
    event_fine_ids: list[tuple[str, str, str]] = []
    for k, ((start_t, end_t), label_idx) in enumerate(zip(placements, label_indices)):
        label, description = vocab.EVENT_POOL[int(label_idx)]
        event = AudioEvent(
            id=f"ev{k}",
            label=label,
            description=description,
            window=TimeWindow(_seconds(start_t), _seconds(end_t)),
        )
        events.append(event)

        try:
            subject, statement = next(fine_slots)
        except StopIteration:
            raise GenerationError("fine-fact statement pool exhausted") from None
        span_t = end_t - start_t
        fact_len_t = _int_between(rng, 5, min(span_t, 15))
        fact_off_t = _int_between(rng, 0, span_t - fact_len_t)
        fine = VisualFact(
            id=f"fine{k}",
            window=TimeWindow(
                _seconds(start_t + fact_off_t), _seconds(start_t + fact_off_t + fact_len_t)
            ),
            statement=statement,
            granularity=Granularity.FINE,
            min_fps=float(
                profile.fine_min_fps_choices[
                    _int_between(rng, 0, len(profile.fine_min_fps_choices) - 1)
                ]
            ),
            max_query_window_s=float(
                profile.fine_max_window_choices[
                    _int_between(rng, 0, len(profile.fine_max_window_choices) - 1)
                ]
            ),
        )
        fine_facts.append(fine)
        event_fine_ids.append((event.id, fine.id, subject))

    n_coarse = _int_between(rng, *profile.n_coarse_range)
    coarse_facts: list[VisualFact] = []
    coarse_nouns: list[tuple[str, str]] = []
    for k in range(n_coarse):
        try:
            noun, statement = next(coarse_slots)
        except StopIteration:
            raise GenerationError("coarse-fact statement pool exhausted") from None
        fact = VisualFact(
            id=f"coarse{k}",
            window=TimeWindow(0.0, duration),
            statement=statement,
            granularity=Granularity.COARSE,
            min_fps=float(_int_between(rng, 1, 2)),
            max_query_window_s=duration,
        )
        coarse_facts.append(fact)
        coarse_nouns.append((fact.id, noun))

    n_speech = _int_between(rng, *profile.n_speech_range)
    speech: list[SpeechSegment] = []
    for k in range(n_speech):
        line = vocab.SPEECH_POOL[_int_between(rng, 0, len(vocab.SPEECH_POOL) - 1)]
        length_t = _int_between(rng, 15, 40)
        start_t = _int_between(rng, margin_t, duration_t - length_t - margin_t)
        speech.append(
            SpeechSegment(
                id=f"sp{k}",
                window=TimeWindow(_seconds(start_t), _seconds(start_t + length_t)),
                transcript=line,
            )
        )

    labels = [e.label for e in events]
    scene = Scene(
        id=scene_id,
        duration_s=duration,
        audio_events=tuple(events),
        speech_segments=tuple(speech),
        visual_facts=tuple(coarse_facts) + tuple(fine_facts),
        global_audio_summary=(
            "ambient street recording; audible events include " + ", ".join(labels)
        ),
        global_visual_summary=(
            "wide establishing view: " + "; ".join(f.statement for f in coarse_facts)
        ),
    )
    return _SceneDraft(
        scene=scene,
        event_fine_ids=tuple(event_fine_ids),
        coarse_nouns=tuple(coarse_nouns),
    )


def _shuffled(pool: tuple, rng: np.random.Generator) -> list:
    order = rng.permutation(len(pool))
    return [pool[int(i)] for i in order]


def _pick_distinct(
    rng: np.random.Generator, candidates: list[str], count: int, forbidden: set[str]
) -> list[str]:
    allowed = [c for c in candidates if c not in forbidden]
    if len(allowed) < count:
        raise GenerationError(
            f"need {count} distractors but only {len(allowed)} candidates remain"
        )
    picks = rng.choice(len(allowed), size=count, replace=False)
    return [allowed[int(i)] for i in picks]


def _assemble_choices(
    rng: np.random.Generator, correct: str, distractors: list[str]
) -> tuple[tuple[str, ...], int]:
    choices = [correct, *distractors]
    order = rng.permutation(len(choices))
    shuffled = [choices[int(i)] for i in order]
    return tuple(shuffled), shuffled.index(correct)


def _discriminating_tokens(
    correct: str, others: tuple[str, ...], config: RetrievalConfig
) -> frozenset[str]:
    other_tokens: set[str] = set()
    for text in others:
        other_tokens |= token_set(text, config)
    return token_set(correct, config) - frozenset(other_tokens)


def _verify_question(
    question: QuestionItem,
    scene: Scene,
    config: RetrievalConfig,
) -> None:
    """Reject a generated question unless the answer key is provably right."""
    try:
        resolved = oracle_answer(question, scene, config)
    except OracleError as exc:
        raise GenerationError(f"question {question.id}: oracle failed: {exc}") from exc
    if resolved != question.answer_index:
        raise GenerationError(
            f"question {question.id}: oracle resolved choice {resolved}, "
            f"key says {question.answer_index}"
        )
    if not question.requires_cross_modal:
        return

    # Import here: the mock tools operate on scenes, so a module-level import
    # would be circular.
    from ..core.cost import CostModel
    from ..tools.mock import clip_qa, event_locate, global_qa

    correct = question.choices[question.answer_index]
    others = tuple(c for i, c in enumerate(question.choices) if i != question.answer_index)
    disc = _discriminating_tokens(correct, others, config)
    coarse_texts = [f.statement for f in scene.coarse_facts()]
    coarse_texts.append(scene.global_visual_summary)
    coarse_texts.append(scene.global_audio_summary)
    for text in coarse_texts:
        leaked = disc & token_set(text, config)
        if leaked:
            raise GenerationError(
                f"question {question.id}: discriminating tokens {sorted(leaked)} leak "
                f"into coarse ground truth {text!r}"
            )

    model = CostModel()
    event = scene.annotation_by_id(question.required_fact_ids[0])
    assert isinstance(event, AudioEvent)
    located = event_locate(event.label, scene, model, config)
    if not located.windows:
        raise GenerationError(f"question {question.id}: event localization found nothing")
    window = clamp_window(
        TimeWindow(located.windows[0].start_s - 2.0, located.windows[0].end_s + 2.0),
        scene.duration_s,
    )
    fine = scene.annotation_by_id(question.required_fact_ids[1])
    assert isinstance(fine, VisualFact)
    clip = clip_qa(question.question, window, scene, model, config)
    if fine.statement not in clip.text:
        raise GenerationError(
            f"question {question.id}: clip inspection of {window.label()} did not "
            f"surface the supporting fact"
        )
    coarse_only = global_qa(question.question, scene, model, config)
    if fine.statement in coarse_only.text:
        raise GenerationError(
            f"question {question.id}: global pass leaked the fine-grained fact"
        )


def generate_suite(
    seed: int,
    n_scenes: int,
    profile: GeneratorProfile | None = None,
) -> tuple[list[Scene], list[QuestionItem]]:
    """Generate `n_scenes` scenes plus their question set, deterministically.

    Each scene contributes one cross-modal question (answerable only through
    localize-then-inspect) and, by default, one unimodal control question.
    """
    if n_scenes < 1:
        raise GenerationError(f"n_scenes must be >= 1, got {n_scenes}")
    profile = profile or GeneratorProfile()
    config = default_retrieval_config()
    seed &= _SEED_MASK

    suite_rng = _stream(seed, _SUITE_STREAM)
    fine_pool = _shuffled(vocab.fine_statement_pool(), suite_rng)
    coarse_pool = _shuffled(vocab.coarse_statement_pool(), suite_rng)
    fine_slots = iter(fine_pool)
    coarse_slots = iter(coarse_pool)

    drafts = [
        _build_scene(seed, i, profile, fine_slots, coarse_slots) for i in range(n_scenes)
    ]

    fine_by_scene: dict[str, set[str]] = {
        d.scene.id: {f.statement for f in d.scene.fine_facts()} for d in drafts
    }
    all_fine_statements = [statement for _, statement in fine_pool]
    all_coarse_statements = [statement for _, statement in coarse_pool]
    all_labels = [label for label, _ in vocab.EVENT_POOL]

    questions: list[QuestionItem] = []
    for i, draft in enumerate(drafts):
        scene = draft.scene
        qrng = _stream(seed, (1 << 32) + i)  # question stream, separate from content

        # Cross-modal question: event anchor + fine fact behind the gate.
        anchor = _int_between(qrng, 0, len(draft.event_fine_ids) - 1)
        event_id, fine_id, subject = draft.event_fine_ids[anchor]
        event = scene.annotation_by_id(event_id)
        fine = scene.annotation_by_id(fine_id)
        assert isinstance(event, AudioEvent) and isinstance(fine, VisualFact)
        template = vocab.CROSS_MODAL_TEMPLATES[
            _int_between(qrng, 0, len(vocab.CROSS_MODAL_TEMPLATES) - 1)
        ]
        distractors = _pick_distinct(
            qrng,
            all_fine_statements,
            profile.choices_per_question - 1,
            forbidden=fine_by_scene[scene.id],
        )
        choices, answer_index = _assemble_choices(qrng, fine.statement, distractors)
        questions.append(
            QuestionItem(
                id=f"{scene.id}-q0",
                scene_id=scene.id,
                question=template.format(label=event.label, subject=subject),
                choices=choices,
                answer_index=answer_index,
                required_fact_ids=(event_id, fine_id),
                requires_cross_modal=True,
            )
        )

        if not profile.include_unimodal_controls:
            continue
        if i % 2 == 0:
            # Audio control: which sound occurs.
            target = scene.audio_events[_int_between(qrng, 0, len(scene.audio_events) - 1)]
            distractor_labels = _pick_distinct(
                qrng,
                all_labels,
                profile.choices_per_question - 1,
                forbidden={e.label for e in scene.audio_events},
            )
            choices, answer_index = _assemble_choices(qrng, target.label, distractor_labels)
            questions.append(
                QuestionItem(
                    id=f"{scene.id}-q1",
                    scene_id=scene.id,
                    question=vocab.AUDIO_CONTROL_TEMPLATE,
                    choices=choices,
                    answer_index=answer_index,
                    required_fact_ids=(target.id,),
                    requires_cross_modal=False,
                )
            )
        else:
            # Visual control: coarse scene-level activity.
            coarse_id, noun = draft.coarse_nouns[
                _int_between(qrng, 0, len(draft.coarse_nouns) - 1)
            ]
            coarse = scene.annotation_by_id(coarse_id)
            assert isinstance(coarse, VisualFact)
            distractors = _pick_distinct(
                qrng,
                all_coarse_statements,
                profile.choices_per_question - 1,
                forbidden={f.statement for f in scene.coarse_facts()},
            )
            choices, answer_index = _assemble_choices(qrng, coarse.statement, distractors)
            questions.append(
                QuestionItem(
                    id=f"{scene.id}-q1",
                    scene_id=scene.id,
                    question=vocab.VISUAL_CONTROL_TEMPLATE.format(noun=noun),
                    choices=choices,
                    answer_index=answer_index,
                    required_fact_ids=(coarse_id,),
                    requires_cross_modal=False,
                )
            )

    scenes = [d.scene for d in drafts]
    by_id = {scene.id: scene for scene in scenes}
    for question in questions:
        _verify_question(question, by_id[question.scene_id], config)
    return scenes, questions


def suite_id_for(seed: int, n_scenes: int) -> str:
    return f"suite-{seed & _SEED_MASK:x}-n{n_scenes}"


def render_suite_files(
    seed: int,
    n_scenes: int,
    profile: GeneratorProfile | None = None,
) -> tuple[str, list[tuple[str, str]]]:
    """Generate a suite and render it as (relative path, file content) pairs.

    This is the single source of truth for on-disk suite bytes; the CLI and
    the service both write exactly these files.
    """
    profile = profile or GeneratorProfile()
    scenes, questions = generate_suite(seed, n_scenes, profile)
    scene_files = [f"scenes/{scene.id}.scene.json" for scene in scenes]
    files: list[tuple[str, str]] = [
        (
            "manifest.json",
            render_document(
                manifest_payload(
                    suite_id=suite_id_for(seed, n_scenes),
                    seed=seed & _SEED_MASK,
                    n_scenes=n_scenes,
                    profile_payload=profile.to_payload(),
                    scene_files=scene_files,
                    questions_file="questions.json",
                )
            ),
        ),
        ("questions.json", render_document(questions_payload(questions))),
    ]
    files.extend(
        (path, render_document(scene.to_payload()))
        for path, scene in zip(scene_files, scenes)
    )
    return suite_id_for(seed, n_scenes), files
