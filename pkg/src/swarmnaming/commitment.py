"""Commitment state machine: discovery, recruitment, cross-inhibition and
abandonment, defining the sub-populations of uncommitted and committed robots."""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple, Optional

from .arena import AreaKind


class Commitment(IntEnum):
    UNCOMMITTED = 0
    A = 1
    B = 2


COMMIT_OF_RESOURCE = {AreaKind.RESOURCE_A: Commitment.A, AreaKind.RESOURCE_B: Commitment.B}
RESOURCE_OF_COMMIT = {Commitment.A: AreaKind.RESOURCE_A, Commitment.B: AreaKind.RESOURCE_B}
LABEL = {Commitment.A: "A", Commitment.B: "B"}


@dataclass(frozen=True)
class CommitmentParams:
    p_recruit: float = 0.7  # per processed beacon
    p_cross_inhibit: float = 0.7  # per processed beacon
    p_abandon: float = 0.0  # per step


class Beacon(NamedTuple):
    """Per-step state broadcast; distinct from game utterances."""

    sender: int
    commitment: Commitment


class Transition(NamedTuple):
    state: Commitment
    kind: Optional[str]  # "recruitment" | "cross_inhibition" | None


def on_discovery(state: Commitment, resource: AreaKind) -> Commitment:
    """Stumbling on a resource commits an uncommitted robot outright."""
    if state == Commitment.UNCOMMITTED:
        return COMMIT_OF_RESOURCE[resource]
    return state


def on_beacon(state: Commitment, beacon: Beacon, params: CommitmentParams, rng) -> Transition:
    """Apply the single beacon a nest-located hearer processed this step.

    Beacons from uncommitted senders and from same-commitment senders change
    nothing and consume no randomness.
    """
    sender = beacon.commitment
    if sender == Commitment.UNCOMMITTED or sender == state:
        return Transition(state, None)
    if state == Commitment.UNCOMMITTED:
        if rng.random() < params.p_recruit:
            return Transition(sender, "recruitment")
        return Transition(state, None)
    # Committed hearer, opposing committed sender: the hearer may be demoted.
    if rng.random() < params.p_cross_inhibit:
        return Transition(Commitment.UNCOMMITTED, "cross_inhibition")
    return Transition(state, None)


def on_abandon(state: Commitment, params: CommitmentParams, rng) -> Transition:
    """Spontaneous commitment loss; disabled at the default p_abandon = 0."""
    if state == Commitment.UNCOMMITTED or params.p_abandon <= 0.0:
        return Transition(state, None)
    if rng.random() < params.p_abandon:
        return Transition(Commitment.UNCOMMITTED, "abandonment")
    return Transition(state, None)


def selected_resource(n_a: int, n_b: int) -> str:
    """Resource holding the larger committed population: "A", "B" or "tie"."""
    if n_a > n_b:
        return "A"
    if n_b > n_a:
        return "B"
    return "tie"
