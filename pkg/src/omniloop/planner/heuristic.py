"""Deterministic coarse-to-fine policy.

The policy walks four phases: CONTEXT gathers cheap global background
(audio caption, then transcript or event inventory), LOCALIZE turns the
question into an event-localization query, INSPECT plays high-rate clips
around the located windows, and DECIDE answers by token overlap against
everything observed. Failed localization earns exactly one backtrack: a
single broad visual scan before deciding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from ..core.types import (
    ActionKind,
    AnswerArgs,
    AsrArgs,
    AudioQAArgs,
    ClipQAArgs,
    EventListArgs,
    EventLocationArgs,
    GlobalCaptionArgs,
    GlobalQAArgs,
    Query,
    TimeWindow,
)
from ..tools.mock import NO_EVENTS
from ..tools.retrieval import (
    RetrievalConfig,
    default_retrieval_config,
    overlap_score,
    tokenize,
)
from .base import PlannerDecision
from .scoring import best_choice_index, choice_scores

if TYPE_CHECKING:
    from ..loop.memory import Memory

_WORD_RE = re.compile(r"[a-z]+")

# Questions about spoken content route through the transcript instead of the
# sound-event inventory during the CONTEXT phase.
DEFAULT_SPEECH_TOKENS = (
    "say",
    "says",
    "said",
    "mention",
    "mentions",
    "mentioned",
    "speak",
    "speaks",
    "speaking",
    "spoken",
    "talk",
    "talks",
    "voice",
    "dialogue",
)


class Phase(str, Enum):
    CONTEXT = "CONTEXT"
    LOCALIZE = "LOCALIZE"
    INSPECT = "INSPECT"
    DECIDE = "DECIDE"


@dataclass(frozen=True)
class HeuristicConfig:
    speech_tokens: tuple[str, ...] = DEFAULT_SPEECH_TOKENS
    inspect_pad_s: float = 2.0
    max_inspect_windows: int = 3
    retrieval: RetrievalConfig = field(default_factory=default_retrieval_config)


@dataclass
class HeuristicState:
    """Mutable per-episode policy state; one instance per episode."""

    phase: Phase = Phase.CONTEXT
    candidate_windows: list[TimeWindow] = field(default_factory=list)
    extracted_keywords: list[str] = field(default_factory=list)
    fallback_used: bool = False
    fallback_pending: bool = False
    rethinks: int = 0
    inspected: int = 0


def _has_action(memory: "Memory", kind: ActionKind) -> bool:
    return any(entry.decision.action is kind for entry in memory.entries)


def _is_speech_question(question: str, config: HeuristicConfig) -> bool:
    words = set(_WORD_RE.findall(question.casefold()))
    return bool(words & set(config.speech_tokens))


def _event_labels(memory: "Memory") -> list[str]:
    for entry in memory.entries:
        if entry.decision.action is ActionKind.EVENT_LIST and entry.observation:
            text = entry.observation.text
            if text == NO_EVENTS:
                return []
            return [label.strip() for label in text.split(",") if label.strip()]
    return []


def _localization_query(
    query: Query, memory: "Memory", config: HeuristicConfig
) -> tuple[str, list[str]]:
    """Pick the localization query: the event label best covered by the
    question, else the question's leading content tokens."""
    labels = _event_labels(memory)
    ranked = sorted(
        (
            (overlap_score(label, query.question, config.retrieval), -position, label)
            for position, label in enumerate(labels)
        ),
        reverse=True,
    )
    matching = [
        label
        for score, _, label in ranked
        if score >= config.retrieval.match_threshold
    ]
    if matching:
        return matching[0], matching
    keywords = tokenize(query.question, config.retrieval)[:3]
    return (" ".join(keywords) or query.question), keywords


def heuristic_decide(
    query: Query,
    memory: "Memory",
    state: HeuristicState,
    config: HeuristicConfig | None = None,
) -> PlannerDecision:
    """One step of the coarse-to-fine policy. Mutates `state`.

    Deterministic: identical (query, memory, state) always yields the same
    decision and the same state transition.
    """
    config = config or HeuristicConfig()
    entries = memory.entries

    # Digest a pending localization result.
    last = entries[-1] if entries else None
    if (
        state.phase is Phase.LOCALIZE
        and last is not None
        and last.decision.action is ActionKind.EVENT_LOCATION
        and last.observation is not None
    ):
        if last.observation.windows:
            state.candidate_windows = list(
                last.observation.windows[: config.max_inspect_windows]
            )
            state.inspected = 0
            state.phase = Phase.INSPECT
        elif not state.fallback_used:
            # The one permitted backtrack: localization found nothing, so
            # return to context gathering for a single broad visual scan.
            state.fallback_used = True
            state.fallback_pending = True
            state.phase = Phase.CONTEXT
        else:
            state.phase = Phase.DECIDE

    if state.fallback_pending:
        state.fallback_pending = False
        state.phase = Phase.DECIDE
        return PlannerDecision(
            action=ActionKind.GLOBAL_QA,
            args=GlobalQAArgs(question=query.question),
            rationale="localization failed; one broad visual scan before deciding",
        )

    if state.phase is Phase.CONTEXT:
        if not _has_action(memory, ActionKind.GLOBAL_CAPTION):
            return PlannerDecision(
                action=ActionKind.GLOBAL_CAPTION,
                args=GlobalCaptionArgs(),
                rationale="establish global audio context first",
            )
        if _is_speech_question(query.question, config) and not _has_action(
            memory, ActionKind.ASR
        ):
            return PlannerDecision(
                action=ActionKind.ASR,
                args=AsrArgs(),
                rationale="question refers to speech; fetch the transcript",
            )
        state.phase = Phase.LOCALIZE

    if state.phase is Phase.LOCALIZE:
        if not _has_action(memory, ActionKind.EVENT_LIST):
            return PlannerDecision(
                action=ActionKind.EVENT_LIST,
                args=EventListArgs(),
                rationale="inventory the sound events before localizing",
            )
        if not _has_action(memory, ActionKind.EVENT_LOCATION):
            locate_query, keywords = _localization_query(query, memory, config)
            state.extracted_keywords = list(keywords)
            return PlannerDecision(
                action=ActionKind.EVENT_LOCATION,
                args=EventLocationArgs(query=locate_query),
                rationale=f"localize {locate_query!r} to anchor clip inspection",
            )
        # A localization already happened but was not digested above (e.g.
        # resumed memory); fall through to deciding on what we have.
        state.phase = Phase.DECIDE

    if state.phase is Phase.INSPECT:
        if state.inspected < len(state.candidate_windows):
            window = state.candidate_windows[state.inspected]
            state.inspected += 1
            padded = TimeWindow(
                max(0.0, window.start_s - config.inspect_pad_s),
                window.end_s + config.inspect_pad_s,
            )
            return PlannerDecision(
                action=ActionKind.CLIP_QA,
                args=ClipQAArgs(question=query.question, window=padded),
                rationale=f"inspect located window {window.label()} at high rate",
            )
        state.phase = Phase.DECIDE

    # DECIDE: answer from everything observed so far.
    evidence = [entry.observation.text for entry in entries if entry.observation]
    scores = choice_scores(query.choices, evidence, config.retrieval)
    if max(scores, default=0.0) == 0.0 and not state.fallback_used:
        state.fallback_used = True
        return PlannerDecision(
            action=ActionKind.GLOBAL_QA,
            args=GlobalQAArgs(question=query.question),
            rationale="no choice supported yet; one broad visual scan before deciding",
        )
    last_reflection = entries[-1].reflection if entries else None
    if last_reflection is not None and last_reflection.inconsistency_detected:
        # Never answer on top of an unresolved cross-modal disagreement;
        # keep probing (bounded by the episode's step budget).
        state.rethinks += 1
        if state.rethinks % 2 == 1:
            return PlannerDecision(
                action=ActionKind.AUDIO_QA,
                args=AudioQAArgs(question=query.question),
                rationale="cross-modal disagreement; re-examine the audio evidence",
            )
        return PlannerDecision(
            action=ActionKind.GLOBAL_QA,
            args=GlobalQAArgs(question=query.question),
            rationale="cross-modal disagreement; re-examine the visual evidence",
        )
    best = best_choice_index(scores)
    return PlannerDecision(
        action=ActionKind.ANSWER,
        args=AnswerArgs(answer=query.choices[best]),
        rationale=f"choice {best} has maximal evidence overlap {scores[best]:.2f}",
    )


class HeuristicPlanner:
    """Planner-protocol wrapper owning the per-episode state."""

    kind = "heuristic"

    def __init__(self, config: HeuristicConfig | None = None):
        self.config = config or HeuristicConfig()
        self.state = HeuristicState()

    def decide(self, query: Query, memory: "Memory") -> PlannerDecision:
        return heuristic_decide(query, memory, self.state, self.config)
