"""Exception hierarchy shared across the package.

Every error raised by omniloop derives from OmniloopError so callers can
catch the whole family at the service or CLI boundary.
"""

from __future__ import annotations


class OmniloopError(Exception):
    """Base class for all omniloop errors."""


class ParseError(OmniloopError):
    """A document could not be parsed at all (malformed syntax)."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        detail = message
        if line is not None:
            detail = f"line {line}: {detail}"
        if field is not None:
            detail = f"{detail} (field: {field})"
        super().__init__(detail)


class ValidationError(OmniloopError):
    """A document parsed but violates a domain invariant."""

    def __init__(self, message: str, *, field: str | None = None):
        self.field = field
        detail = f"{message} (field: {field})" if field is not None else message
        super().__init__(detail)


class GenerationError(OmniloopError):
    """Suite generation could not satisfy the requested profile."""


class OracleError(OmniloopError):
    """The answer-key oracle could not resolve a question (generator bug)."""


class ToolError(OmniloopError):
    """Base for recoverable tool failures; the episode loop turns these into
    sentinel observations instead of aborting.

    `cost` and `latency_ms` record work done before the failure (a failed
    localization still scanned the audio), so accounting stays honest.
    """

    sentinel: str = "error"

    def __init__(self, message: str, *, cost=None, latency_ms: int = 0):
        super().__init__(message)
        self.message = message
        self.cost = cost
        self.latency_ms = latency_ms

    def sentinel_text(self) -> str:
        return f"error[{self.sentinel}]: {self.message}"


class NoMatchError(ToolError):
    """Event localization found nothing above the match threshold."""

    sentinel = "no_match"


class WindowTooLongError(ToolError):
    """A clip request exceeded the hard window cap."""

    sentinel = "window_too_long"


class ScriptExhaustedError(OmniloopError):
    """A replay script ran out of decisions before the episode ended."""


class DecisionParseError(OmniloopError):
    """A model response could not be parsed into a planner decision."""


class GatewayError(OmniloopError):
    """A chat request failed after retry exhaustion."""

    def __init__(self, message: str, *, status: str):
        self.status = status
        super().__init__(f"{message} (status: {status})")


class TraceFormatError(OmniloopError):
    """A trace file is malformed."""

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        detail = f"line {line}: {message}" if line is not None else message
        super().__init__(detail)


class EmptyInputError(OmniloopError):
    """An analytics operation received no traces."""


class KeyMismatchError(OmniloopError):
    """A trace references a question id that is not in the suite."""
