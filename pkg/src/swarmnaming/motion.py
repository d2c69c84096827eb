"""Per-step kinematics: correlated random walk while exploring, straight-line
navigation between nest and committed resource, short-range repulsion.

The engine runs a vectorized equivalent of these operations; the scalar forms
here are the reference implementation and the unit-test surface.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple, Optional, Sequence

from .arena import Arena, AreaKind

TWO_PI = 2.0 * math.pi

# Reaching a navigation target means landing within one step of travel; the
# update below lands exactly on the target, so the tolerance only absorbs
# float dust.
TARGET_TOL = 1e-7

# Maximum heading deflection per neighbor, scaled by (1 - dist / avoid_radius).
DEFLECT_MAX = math.pi


class MotionMode(IntEnum):
    BLIND_WALK = 0  # warm-up: random walk, no sensing, no talking
    EXPLORE = 1
    GOTO_NEST = 2
    GOTO_A = 3
    GOTO_B = 4


GOTO_RESOURCE = {AreaKind.RESOURCE_A: MotionMode.GOTO_A, AreaKind.RESOURCE_B: MotionMode.GOTO_B}
RESOURCE_OF_MODE = {MotionMode.GOTO_A: AreaKind.RESOURCE_A, MotionMode.GOTO_B: AreaKind.RESOURCE_B}


class Pose(NamedTuple):
    x: float
    y: float
    heading: float  # radians in [0, 2*pi)


@dataclass(frozen=True)
class MotionParams:
    dt: float = 0.1
    speed: float = 0.1
    turn_sigma: float = 0.3
    avoid_radius: float = 0.1


def wrap_angle(theta: float) -> float:
    """Normalize to [0, 2*pi)."""
    return theta % TWO_PI


def wrap_signed(theta: float) -> float:
    """Normalize to (-pi, pi]."""
    theta = (theta + math.pi) % TWO_PI - math.pi
    return math.pi if theta == -math.pi else theta


def avoidance_deflection(
    pose: Pose,
    desired_heading: float,
    neighbors: Sequence[tuple[float, float]],
    avoid_radius: float,
) -> float:
    """Heading correction steering away from neighbors ahead of the robot.

    Each neighbor closer than ``avoid_radius`` and within +-90 degrees of the
    desired heading contributes a turn away from it, linear in proximity. A
    neighbor dead ahead counts as being on the left, so two robots meeting
    head-on both bear right instead of cancelling out.
    """
    if avoid_radius <= 0:
        return 0.0
    total = 0.0
    for nx, ny in neighbors:
        dist = math.hypot(nx - pose.x, ny - pose.y)
        if dist >= avoid_radius:
            continue
        rel = wrap_signed(math.atan2(ny - pose.y, nx - pose.x) - desired_heading)
        if abs(rel) >= math.pi / 2:
            continue  # behind or abeam: moving forward already separates
        side = 1.0 if rel >= 0 else -1.0
        total -= side * (1.0 - dist / avoid_radius) * DEFLECT_MAX
    return max(-math.pi, min(math.pi, total))


def target_for_mode(mode: MotionMode, arena: Arena) -> Optional[tuple[float, float]]:
    if mode == MotionMode.GOTO_NEST:
        return arena.nest_center
    if mode in RESOURCE_OF_MODE:
        return arena.resource_center(RESOURCE_OF_MODE[mode])
    return None


def step_motion(
    pose: Pose,
    mode: MotionMode,
    arena: Arena,
    neighbors: Sequence[tuple[float, float]],
    params: MotionParams,
    rng,
) -> Pose:
    """Advance one control step; displacement never exceeds speed * dt.

    Random-walk modes consume one Gaussian turn increment from ``rng`` even
    when turn_sigma is zero, mirroring the engine's draw order.
    """
    noise = rng.standard_normal() * params.turn_sigma
    target = target_for_mode(mode, arena)
    if target is None:
        desired = wrap_angle(pose.heading + noise)
    else:
        desired = wrap_angle(math.atan2(target[1] - pose.y, target[0] - pose.x))

    deflect = avoidance_deflection(pose, desired, neighbors, params.avoid_radius)
    heading = wrap_angle(desired + deflect)

    step_len = params.speed * params.dt
    if target is not None and deflect == 0.0:
        # Undeflected navigation lands exactly on the target instead of
        # overshooting it.
        step_len = min(step_len, math.hypot(target[0] - pose.x, target[1] - pose.y))
    return Pose(
        pose.x + step_len * math.cos(heading),
        pose.y + step_len * math.sin(heading),
        heading,
    )


class ArrivalEvent(NamedTuple):
    kind: AreaKind  # NEST or a resource


def arrival_check(
    mode: MotionMode,
    prev_area: AreaKind,
    area: AreaKind,
) -> Optional[ArrivalEvent]:
    """Edge-triggered arrival: fires when the ground sensor first reads an
    area that matters for the current mode.

    Resource arrivals fire for the matching GoTo mode and for explorers
    (discovery). Nest arrivals fire for GoToNest.
    """
    if area == prev_area or area == AreaKind.OPEN:
        return None
    if area == AreaKind.NEST:
        return ArrivalEvent(area) if mode == MotionMode.GOTO_NEST else None
    if mode == MotionMode.EXPLORE:
        return ArrivalEvent(area)
    if mode in RESOURCE_OF_MODE and RESOURCE_OF_MODE[mode] == area:
        return ArrivalEvent(area)
    return None


def at_target(pose: Pose, target: tuple[float, float]) -> bool:
    """True when the robot has landed on its navigation target."""
    return math.hypot(target[0] - pose.x, target[1] - pose.y) <= TARGET_TOL


def maybe_return_to_nest(p_return: float, rng) -> bool:
    """Per-step chance for an uncommitted explorer to head home."""
    return rng.random() < p_return
