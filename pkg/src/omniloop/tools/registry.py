"""Tool registry: one binding per non-ANSWER action kind.

A binding is any callable (args, world) -> Observation, so mock backends
over scenes and live backends over media handles are interchangeable per
action kind. Registries are stateless and safe to share across episodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ..core.cost import CostModel
from ..core.types import (
    ActionArgs,
    ActionKind,
    AsrArgs,
    AudioQAArgs,
    ClipQAArgs,
    EventListArgs,
    EventLocationArgs,
    GlobalCaptionArgs,
    GlobalQAArgs,
    Observation,
    TOOL_KINDS,
)
from ..scene.model import Scene
from . import mock
from .retrieval import RetrievalConfig, default_retrieval_config

ToolFn = Callable[[ActionArgs, Any], Observation]


@dataclass
class ToolRegistry:
    """Dispatch table from action kind to tool implementation."""

    bindings: dict[ActionKind, ToolFn]
    cost_model: CostModel = field(default_factory=CostModel)

    def __post_init__(self) -> None:
        if ActionKind.ANSWER in self.bindings:
            raise ValueError("ANSWER is terminal and must never be bound to a tool")
        missing = [k.value for k in TOOL_KINDS if k not in self.bindings]
        if missing:
            raise ValueError(f"registry is missing bindings for: {missing}")
        extra = [k for k in self.bindings if k not in TOOL_KINDS]
        if extra:
            raise ValueError(f"registry has unknown bindings: {extra}")

    def execute(self, kind: ActionKind, args: ActionArgs, world: Any) -> Observation:
        if args.KIND is not kind:
            raise ValueError(f"args tagged {args.KIND.value} passed for {kind.value}")
        return self.bindings[kind](args, world)

    def rebind(self, kind: ActionKind, fn: ToolFn) -> "ToolRegistry":
        """A copy of this registry with one binding replaced."""
        bindings = dict(self.bindings)
        bindings[kind] = fn
        return ToolRegistry(bindings=bindings, cost_model=self.cost_model)


def build_mock_registry(
    cost_model: CostModel | None = None,
    retrieval: RetrievalConfig | None = None,
) -> ToolRegistry:
    """The standard registry: every tool answered from scene ground truth."""
    model = cost_model or CostModel()
    config = retrieval or default_retrieval_config()

    def _global_qa(args: GlobalQAArgs, scene: Scene) -> Observation:
        return mock.global_qa(args.question, scene, model, config)

    def _clip_qa(args: ClipQAArgs, scene: Scene) -> Observation:
        return mock.clip_qa(args.question, args.window, scene, model, config)

    def _asr(args: AsrArgs, scene: Scene) -> Observation:
        return mock.asr(scene, model)

    def _caption(args: GlobalCaptionArgs, scene: Scene) -> Observation:
        return mock.global_audio_caption(scene, model)

    def _audio_qa(args: AudioQAArgs, scene: Scene) -> Observation:
        return mock.audio_qa(args.question, scene, model, config)

    def _event_list(args: EventListArgs, scene: Scene) -> Observation:
        return mock.event_list(scene, model)

    def _event_locate(args: EventLocationArgs, scene: Scene) -> Observation:
        return mock.event_locate(args.query, scene, model, config)

    return ToolRegistry(
        bindings={
            ActionKind.GLOBAL_QA: _global_qa,
            ActionKind.CLIP_QA: _clip_qa,
            ActionKind.ASR: _asr,
            ActionKind.GLOBAL_CAPTION: _caption,
            ActionKind.AUDIO_QA: _audio_qa,
            ActionKind.EVENT_LIST: _event_list,
            ActionKind.EVENT_LOCATION: _event_locate,
        },
        cost_model=model,
    )


def build_dense_registry(
    cost_model: CostModel | None = None,
    retrieval: RetrievalConfig | None = None,
) -> ToolRegistry:
    """Mock registry with GLOBAL_QA swapped for full-duration dense captioning.

    Used by the dense-caption comparator policy; everything else stays mock.
    """
    model = cost_model or CostModel()
    config = retrieval or default_retrieval_config()
    base = build_mock_registry(model, config)

    def _dense(args: GlobalQAArgs, scene: Scene) -> Observation:
        return mock.dense_global_caption(args.question, scene, model, config)

    return base.rebind(ActionKind.GLOBAL_QA, _dense)
