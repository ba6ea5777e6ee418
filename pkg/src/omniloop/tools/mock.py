"""Deterministic mock backends for the seven perception tools.

Each tool is a pure function of (arguments, scene, cost model, retrieval
config): repeated calls return identical observations. Video tools charge
visual tokens only, audio and event tools charge audio tokens only, and
every tool charges text tokens for its own response.

The granularity gate lives here: a FINE visual fact is surfaced only by
clip inspection whose window contains the fact (with 1 s of slack), whose
sampling rate meets the fact's minimum, and whose length stays within the
fact's maximum query window. The global pass never surfaces FINE facts.
"""

from __future__ import annotations

from ..core.cost import CostModel, estimate_audio_tokens, estimate_visual_tokens
from ..core.errors import NoMatchError, WindowTooLongError
from ..core.types import (
    ActionKind,
    Observation,
    TimeWindow,
    TokenCost,
    clamp_window,
)
from ..scene.model import Granularity, Scene, VisualFact
from .retrieval import RetrievalConfig, overlap_score

GLOBAL_SAMPLING_FPS = 2.0
CLIP_SAMPLING_FPS = 5.0
CLIP_WINDOW_CAP_S = 30.0

NO_VISUAL_MATCH = "no relevant visual content found"
NO_CLIP_MATCH = "no relevant visual content found in clip"
NO_AUDIO_MATCH = "no relevant audio content found"
NO_SPEECH = "no speech detected"
NO_EVENTS = "no sound events detected"
INSUFFICIENT_DETAIL = "insufficient visual detail at global sampling"


def _finish(
    kind: ActionKind,
    text: str,
    model: CostModel,
    *,
    visual: int = 0,
    audio: int = 0,
    windows: tuple[TimeWindow, ...] = (),
) -> Observation:
    cost = TokenCost(visual=visual, audio=audio, text=model.text_tokens(text))
    return Observation(
        kind=kind,
        text=text,
        windows=windows,
        cost=cost,
        latency_ms=model.latency_ms(kind, cost.total()),
    )


def _rank_key(score: float, fact: VisualFact) -> tuple:
    # Higher score first; on ties the coarser fact, then the earlier window,
    # then lexicographic statement order.
    return (
        -score,
        0 if fact.granularity is Granularity.COARSE else 1,
        fact.window.start_s,
        fact.statement,
    )


def global_qa(
    question: str, scene: Scene, model: CostModel, config: RetrievalConfig
) -> Observation:
    """Sparse full-video pass at 2 fps: coarse facts and the visual summary only.

    If the best-matching fact is FINE, the pass reports insufficient detail —
    sparse global sampling cannot resolve it.
    """
    visual = estimate_visual_tokens(GLOBAL_SAMPLING_FPS, scene.full_window(), model)

    summary_fact = VisualFact(
        id="__summary__",
        window=scene.full_window(),
        statement=scene.global_visual_summary,
        granularity=Granularity.COARSE,
        min_fps=1.0,
        max_query_window_s=scene.duration_s,
    )
    candidates = [
        (overlap_score(question, fact.statement, config), fact)
        for fact in (*scene.visual_facts, summary_fact)
        if fact.statement
    ]
    scored = [(s, f) for s, f in candidates if s > 0.0]
    if not scored:
        return _finish(ActionKind.GLOBAL_QA, NO_VISUAL_MATCH, model, visual=visual)
    scored.sort(key=lambda pair: _rank_key(*pair))
    best = scored[0][1]
    if best.granularity is Granularity.FINE:
        return _finish(ActionKind.GLOBAL_QA, INSUFFICIENT_DETAIL, model, visual=visual)
    text = f"global view at {GLOBAL_SAMPLING_FPS:g} fps: {best.statement}"
    return _finish(ActionKind.GLOBAL_QA, text, model, visual=visual)


def clip_qa(
    question: str,
    window: TimeWindow,
    scene: Scene,
    model: CostModel,
    config: RetrievalConfig,
) -> Observation:
    """Dense inspection of one clip at 5 fps.

    Raises WindowTooLongError for windows over the 30 s cap: the caller is
    expected to localize first instead of scanning wholesale.
    """
    if window.duration() > CLIP_WINDOW_CAP_S:
        raise WindowTooLongError(
            f"requested window of {window.duration():g} s exceeds the "
            f"{CLIP_WINDOW_CAP_S:g} s clip cap; localize first"
        )
    clip = clamp_window(window, scene.duration_s)
    visual = estimate_visual_tokens(CLIP_SAMPLING_FPS, clip, model)

    gated = [
        fact
        for fact in scene.visual_facts
        if clip.contains(fact.window, pad_s=1.0)
        and CLIP_SAMPLING_FPS >= fact.min_fps
        and clip.duration() <= fact.max_query_window_s
    ]
    scored = [
        (overlap_score(question, fact.statement, config), fact)
        for fact in gated
    ]
    scored = [(s, f) for s, f in scored if s > 0.0]
    if not scored:
        return _finish(ActionKind.CLIP_QA, NO_CLIP_MATCH, model, visual=visual)
    scored.sort(key=lambda pair: _rank_key(*pair))
    text = f"clip {clip.label()} at {CLIP_SAMPLING_FPS:g} fps: {scored[0][1].statement}"
    return _finish(ActionKind.CLIP_QA, text, model, visual=visual)


def asr(scene: Scene, model: CostModel) -> Observation:
    """Timestamped transcript of all speech, in temporal order."""
    audio = estimate_audio_tokens(scene.full_window(), model)
    segments = sorted(scene.speech_segments, key=lambda s: s.window.start_s)
    if not segments:
        return _finish(ActionKind.ASR, NO_SPEECH, model, audio=audio)
    lines = [f"{seg.window.label()} {seg.transcript}" for seg in segments]
    return _finish(
        ActionKind.ASR,
        "\n".join(lines),
        model,
        audio=audio,
        windows=tuple(seg.window for seg in segments),
    )


def global_audio_caption(scene: Scene, model: CostModel) -> Observation:
    """The scene's acoustic-environment summary, verbatim."""
    audio = estimate_audio_tokens(scene.full_window(), model)
    text = scene.global_audio_summary or "[warning] global audio summary is empty"
    return _finish(ActionKind.GLOBAL_CAPTION, text, model, audio=audio)


def audio_qa(
    question: str, scene: Scene, model: CostModel, config: RetrievalConfig
) -> Observation:
    """Targeted audio inquiry over sound events and speech transcripts.

    Returns every positively matching item, events before transcripts, each
    ordered by start time.
    """
    audio = estimate_audio_tokens(scene.full_window(), model)
    lines: list[tuple[int, float, str]] = []
    for event in scene.audio_events:
        score = overlap_score(question, f"{event.label} {event.description}", config)
        if score > 0.0:
            lines.append(
                (
                    0,
                    event.window.start_s,
                    f"sound event '{event.label}' {event.window.label()}: {event.description}",
                )
            )
    for segment in scene.speech_segments:
        if overlap_score(question, segment.transcript, config) > 0.0:
            lines.append(
                (1, segment.window.start_s, f"speech {segment.window.label()}: {segment.transcript}")
            )
    if not lines:
        return _finish(ActionKind.AUDIO_QA, NO_AUDIO_MATCH, model, audio=audio)
    lines.sort()
    return _finish(
        ActionKind.AUDIO_QA, "\n".join(line for _, _, line in lines), model, audio=audio
    )


def event_list(scene: Scene, model: CostModel) -> Observation:
    """Distinct sound-event labels in order of first occurrence, no timestamps.

    Timestamps are deliberately withheld; localization is a separate call,
    which keeps the list-then-locate chain observable in traces.
    """
    audio = estimate_audio_tokens(scene.full_window(), model)
    labels: list[str] = []
    for event in scene.audio_events:
        if event.label not in labels:
            labels.append(event.label)
    if not labels:
        return _finish(ActionKind.EVENT_LIST, NO_EVENTS, model, audio=audio)
    return _finish(ActionKind.EVENT_LIST, ", ".join(labels), model, audio=audio)


def event_locate(
    query: str, scene: Scene, model: CostModel, config: RetrievalConfig
) -> Observation:
    """Timestamps of every audio event matching the query at the threshold.

    Raises NoMatchError when nothing clears the threshold, charging the full
    audio scan that found nothing.
    """
    audio = estimate_audio_tokens(scene.full_window(), model)
    matches = [
        event
        for event in scene.audio_events
        if overlap_score(query, f"{event.label} {event.description}", config)
        >= config.match_threshold
    ]
    if not matches:
        text_tokens = model.text_tokens("")
        raise NoMatchError(
            f"no audio event matches {query!r}",
            cost=TokenCost(audio=audio, text=text_tokens),
            latency_ms=model.latency_ms(ActionKind.EVENT_LOCATION, audio + text_tokens),
        )
    matches.sort(key=lambda e: e.window.start_s)
    lines = [f"event '{event.label}' at {event.window.label()}" for event in matches]
    return _finish(
        ActionKind.EVENT_LOCATION,
        "\n".join(lines),
        model,
        audio=audio,
        windows=tuple(event.window for event in matches),
    )


def dense_global_caption(
    question: str, scene: Scene, model: CostModel, config: RetrievalConfig
) -> Observation:
    """Full-video dense captioning at clip rate: the expensive comparator.

    Captions everything visible to global sampling (summary plus coarse
    facts) at 5 fps over the whole duration. Fine-grained facts still stay
    behind the granularity gate: dense captions without localization do not
    recover detail.
    """
    del question, config  # captions everything; the query does not narrow cost
    visual = estimate_visual_tokens(CLIP_SAMPLING_FPS, scene.full_window(), model)
    lines = [
        f"dense captions at {CLIP_SAMPLING_FPS:g} fps over {scene.full_window().label()}:"
    ]
    if scene.global_visual_summary:
        lines.append(scene.global_visual_summary)
    lines.extend(
        f"{fact.window.label()} {fact.statement}" for fact in scene.coarse_facts()
    )
    return _finish(ActionKind.GLOBAL_QA, "\n".join(lines), model, visual=visual)
