"""Brute-force answer-key oracle.

Resolves a question by looking up the referenced annotations directly in the
scene ground truth and matching choices with the same retrieval rules the
mock tools use. Intentionally independent of the agent loop: it never runs
an episode, so it can arbitrate one.
"""

from __future__ import annotations

from ..core.errors import OracleError
from ..tools.retrieval import RetrievalConfig, default_retrieval_config, overlap_score
from .model import AudioEvent, QuestionItem, Scene, SpeechSegment, VisualFact


def _annotation_text(annotation: AudioEvent | SpeechSegment | VisualFact) -> str:
    if isinstance(annotation, AudioEvent):
        return f"{annotation.label}. {annotation.description}"
    if isinstance(annotation, SpeechSegment):
        return annotation.transcript
    return annotation.statement


def oracle_answer(
    question: QuestionItem,
    scene: Scene,
    config: RetrievalConfig | None = None,
) -> int:
    """Return the choice index supported by the question's referenced facts.

    Raises OracleError when a referenced annotation is missing or when no
    choice clears the match threshold — either way a generator bug.
    """
    config = config or default_retrieval_config()
    if question.scene_id != scene.id:
        raise OracleError(
            f"question {question.id} references scene {question.scene_id!r}, "
            f"got {scene.id!r}"
        )
    statements = []
    for fact_id in question.required_fact_ids:
        annotation = scene.annotation_by_id(fact_id)
        if annotation is None:
            raise OracleError(
                f"question {question.id} references missing annotation {fact_id!r}"
            )
        statements.append(_annotation_text(annotation))
    evidence = " ".join(statements)
    scores = [overlap_score(choice, evidence, config) for choice in question.choices]
    best = max(scores)
    if best < config.match_threshold:
        raise OracleError(
            f"question {question.id}: no choice matches the referenced ground truth"
        )
    return scores.index(best)
