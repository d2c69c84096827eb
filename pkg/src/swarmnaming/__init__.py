"""Deterministic simulator of a foraging robot swarm that evolves names for
its resources through a broadcast naming game played over the interaction
network the task itself creates."""

from .config import Mode, RunConfig, Variant, load_config
from .engine import RunRecord, SimScript, simulate

__all__ = [
    "Mode",
    "RunConfig",
    "RunRecord",
    "SimScript",
    "Variant",
    "load_config",
    "simulate",
]
