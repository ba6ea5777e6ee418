"""Seeded random planners: the chance-level control and a chaotic prober."""

from __future__ import annotations

import random
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
from .base import PlannerDecision

if TYPE_CHECKING:
    from ..loop.memory import Memory


class RandomGuessPlanner:
    """Answers immediately with a uniformly random choice: the chance baseline."""

    kind = "random"

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def decide(self, query: Query, memory: "Memory") -> PlannerDecision:
        index = self._rng.randrange(len(query.choices))
        return PlannerDecision(
            action=ActionKind.ANSWER,
            args=AnswerArgs(answer=query.choices[index]),
            rationale=f"random guess: choice {index}",
        )


class RandomToolPlanner:
    """Calls random tools with random arguments, answering with probability
    `answer_prob` per step. Exercises sentinel and error paths in the loop."""

    kind = "random-tools"

    def __init__(self, seed: int, answer_prob: float = 0.2, max_window_s: float = 40.0):
        self._rng = random.Random(seed)
        self.answer_prob = answer_prob
        self.max_window_s = max_window_s

    def decide(self, query: Query, memory: "Memory") -> PlannerDecision:
        rng = self._rng
        if rng.random() < self.answer_prob:
            index = rng.randrange(len(query.choices))
            return PlannerDecision(
                action=ActionKind.ANSWER,
                args=AnswerArgs(answer=query.choices[index]),
                rationale="random answer",
            )
        kind = rng.choice(
            [
                ActionKind.GLOBAL_QA,
                ActionKind.CLIP_QA,
                ActionKind.ASR,
                ActionKind.GLOBAL_CAPTION,
                ActionKind.AUDIO_QA,
                ActionKind.EVENT_LIST,
                ActionKind.EVENT_LOCATION,
            ]
        )
        if kind is ActionKind.GLOBAL_QA:
            return PlannerDecision(kind, GlobalQAArgs(question=query.question), "random")
        if kind is ActionKind.CLIP_QA:
            start = round(rng.uniform(0.0, 30.0), 1)
            length = round(rng.uniform(0.5, self.max_window_s), 1)
            window = TimeWindow(start, start + length)
            return PlannerDecision(
                kind, ClipQAArgs(question=query.question, window=window), "random"
            )
        if kind is ActionKind.ASR:
            return PlannerDecision(kind, AsrArgs(), "random")
        if kind is ActionKind.GLOBAL_CAPTION:
            return PlannerDecision(kind, GlobalCaptionArgs(), "random")
        if kind is ActionKind.AUDIO_QA:
            return PlannerDecision(kind, AudioQAArgs(question=query.question), "random")
        if kind is ActionKind.EVENT_LIST:
            return PlannerDecision(kind, EventListArgs(), "random")
        words = query.question.split()
        probe = " ".join(words[: rng.randrange(1, max(2, len(words)))]) or query.question
        return PlannerDecision(kind, EventLocationArgs(query=probe), "random")
