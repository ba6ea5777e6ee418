"""Keyword retrieval shared by the mock tools, the planner, and the oracle.

Matching is deliberately simple and auditable: case-folded word tokens,
a fixed 50-word stopword list shipped with the package, and directional
token overlap. Planner-side answer scoring reuses exactly these rules so
the policy and the answer-key oracle can never disagree on what "matches".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*")

DEFAULT_MATCH_THRESHOLD = 0.5


@lru_cache(maxsize=1)
def load_default_stopwords() -> frozenset[str]:
    """The fixed stopword list bundled with the package (one word per line)."""
    text = resources.files("omniloop.tools").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


@dataclass(frozen=True)
class RetrievalConfig:
    """Knobs for keyword matching. Case folding is always on."""

    stopwords: frozenset[str]
    match_threshold: float = DEFAULT_MATCH_THRESHOLD
    case_fold: bool = True

    def __post_init__(self) -> None:
        if not (0.0 < self.match_threshold <= 1.0):
            raise ValueError("match_threshold must be in (0, 1]")


@lru_cache(maxsize=1)
def default_retrieval_config() -> RetrievalConfig:
    return RetrievalConfig(stopwords=load_default_stopwords())


def tokenize(text: str, config: RetrievalConfig) -> list[str]:
    """Case-folded word tokens in order, stopwords removed."""
    raw = _TOKEN_RE.findall(text.casefold())
    return [t for t in raw if t not in config.stopwords]


def token_set(text: str, config: RetrievalConfig) -> frozenset[str]:
    return frozenset(tokenize(text, config))


def overlap_score(query: str, target: str, config: RetrievalConfig) -> float:
    """Fraction of the query's content tokens that appear in the target.

    Returns 0.0 when the query has no content tokens, so stopword-only and
    empty queries never match anything.
    """
    q = token_set(query, config)
    if not q:
        return 0.0
    t = token_set(target, config)
    return len(q & t) / len(q)


def meets_threshold(query: str, target: str, config: RetrievalConfig) -> bool:
    return overlap_score(query, target, config) >= config.match_threshold
