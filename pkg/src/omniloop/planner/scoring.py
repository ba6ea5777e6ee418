"""Answer-choice scoring against accumulated evidence.

Planner decisions, reflection, the oracle, and benchmark scoring all match
choices with the same directional token overlap, so "the planner answered
correctly" and "the key says so" can never diverge on matching semantics.
"""

from __future__ import annotations

import re

from ..tools.retrieval import RetrievalConfig, default_retrieval_config, overlap_score

_LETTER_RE = re.compile(r"^[a-d]$")


def choice_scores(
    choices: tuple[str, ...] | list[str],
    evidence_texts: list[str],
    config: RetrievalConfig | None = None,
) -> list[float]:
    """Support score per choice over the concatenated evidence."""
    config = config or default_retrieval_config()
    evidence = "\n".join(evidence_texts)
    return [overlap_score(choice, evidence, config) for choice in choices]


def best_choice_index(scores: list[float]) -> int:
    """Index of the maximal score; ties break to the lowest index."""
    return scores.index(max(scores))


def supported_choice(
    choices: tuple[str, ...] | list[str],
    observation_text: str,
    config: RetrievalConfig | None = None,
) -> int | None:
    """The single choice this observation supports, if any.

    An observation supports the choice it matches best, provided the match
    clears the threshold and the argmax is unique; ambiguous observations
    support nothing.
    """
    config = config or default_retrieval_config()
    scores = [overlap_score(choice, observation_text, config) for choice in choices]
    top = max(scores)
    if top < config.match_threshold:
        return None
    winners = [i for i, s in enumerate(scores) if s == top]
    if len(winners) != 1:
        return None
    return winners[0]


def normalize_answer(
    answer_text: str | None,
    choices: tuple[str, ...] | list[str],
    config: RetrievalConfig | None = None,
) -> int | None:
    """Map a free-text answer onto a choice index, or None if unmatchable.

    Resolution order: exact case-folded match, then a bare choice letter
    (a-d), then retrieval matching at the threshold.
    """
    if answer_text is None:
        return None
    config = config or default_retrieval_config()
    text = answer_text.strip()
    folded = text.casefold()
    for i, choice in enumerate(choices):
        if folded == choice.strip().casefold():
            return i
    letter = folded.rstrip(".):")
    if _LETTER_RE.match(letter):
        index = ord(letter) - ord("a")
        if index < len(choices):
            return index
    scores = [overlap_score(choice, text, config) for choice in choices]
    top = max(scores, default=0.0)
    if top >= config.match_threshold:
        return scores.index(top)
    return None
