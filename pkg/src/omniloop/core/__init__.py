"""Shared domain types, time arithmetic, and the token/latency cost model."""

from .cost import CostModel, estimate_audio_tokens, estimate_visual_tokens
from .errors import (
    DecisionParseError,
    EmptyInputError,
    GatewayError,
    GenerationError,
    KeyMismatchError,
    NoMatchError,
    OmniloopError,
    OracleError,
    ParseError,
    ScriptExhaustedError,
    ToolError,
    TraceFormatError,
    ValidationError,
    WindowTooLongError,
)
from .types import (
    AUDIO_KINDS,
    TOOL_KINDS,
    VIDEO_KINDS,
    ActionArgs,
    ActionKind,
    AnswerArgs,
    AsrArgs,
    AudioQAArgs,
    ClipQAArgs,
    EventListArgs,
    EventLocationArgs,
    GlobalCaptionArgs,
    GlobalQAArgs,
    Observation,
    Query,
    TimeWindow,
    TokenCost,
    args_from_payload,
    clamp_window,
    derive_seed,
    format_seconds,
)

__all__ = [
    "AUDIO_KINDS",
    "TOOL_KINDS",
    "VIDEO_KINDS",
    "ActionArgs",
    "ActionKind",
    "AnswerArgs",
    "AsrArgs",
    "AudioQAArgs",
    "ClipQAArgs",
    "CostModel",
    "DecisionParseError",
    "EmptyInputError",
    "EventListArgs",
    "EventLocationArgs",
    "GatewayError",
    "GenerationError",
    "GlobalCaptionArgs",
    "GlobalQAArgs",
    "KeyMismatchError",
    "NoMatchError",
    "Observation",
    "OmniloopError",
    "OracleError",
    "ParseError",
    "Query",
    "ScriptExhaustedError",
    "TimeWindow",
    "TokenCost",
    "ToolError",
    "TraceFormatError",
    "ValidationError",
    "WindowTooLongError",
    "args_from_payload",
    "clamp_window",
    "derive_seed",
    "estimate_audio_tokens",
    "estimate_visual_tokens",
    "format_seconds",
]
