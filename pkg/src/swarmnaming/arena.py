"""World geometry: a circular nest and two circular resource areas on an
unbounded plane, plus the point classification used by ground sensing."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np


class AreaKind(IntEnum):
    OPEN = 0
    NEST = 1
    RESOURCE_A = 2
    RESOURCE_B = 3


RESOURCES = (AreaKind.RESOURCE_A, AreaKind.RESOURCE_B)


@dataclass(frozen=True)
class Arena:
    """Immutable layout; safe to share across concurrent readers.

    Default layout puts the nest at the origin with resource A at (-d, 0)
    and resource B at (+d, 0).
    """

    nest_center: tuple[float, float] = (0.0, 0.0)
    resource_a_center: tuple[float, float] = (-2.5, 0.0)
    resource_b_center: tuple[float, float] = (2.5, 0.0)
    area_radius: float = 0.3
    nest_distance: float = 2.5

    def __post_init__(self):
        da = math.dist(self.resource_a_center, self.nest_center)
        db = math.dist(self.resource_b_center, self.nest_center)
        if not (
            math.isclose(da, self.nest_distance) and math.isclose(db, self.nest_distance)
        ):
            raise ValueError("both resources must sit at nest_distance from the nest")
        if self.area_radius <= 0:
            raise ValueError("area_radius must be > 0")
        if self.nest_distance <= 2 * self.area_radius:
            raise ValueError("areas must be disjoint: nest_distance > 2 * area_radius")

    @classmethod
    def from_params(cls, area_radius: float, nest_distance: float) -> "Arena":
        return cls(
            nest_center=(0.0, 0.0),
            resource_a_center=(-nest_distance, 0.0),
            resource_b_center=(nest_distance, 0.0),
            area_radius=area_radius,
            nest_distance=nest_distance,
        )

    def resource_center(self, kind: AreaKind) -> tuple[float, float]:
        if kind == AreaKind.RESOURCE_A:
            return self.resource_a_center
        if kind == AreaKind.RESOURCE_B:
            return self.resource_b_center
        raise ValueError(f"not a resource: {kind}")


def classify(arena: Arena, p: tuple[float, float]) -> AreaKind:
    """Area containing point ``p``; a point exactly on a circle is inside.

    Areas are disjoint, so at most one test can match.
    """
    r2 = arena.area_radius**2
    if _dist2(p, arena.nest_center) <= r2:
        return AreaKind.NEST
    if _dist2(p, arena.resource_a_center) <= r2:
        return AreaKind.RESOURCE_A
    if _dist2(p, arena.resource_b_center) <= r2:
        return AreaKind.RESOURCE_B
    return AreaKind.OPEN


def area_centers(arena: Arena) -> np.ndarray:
    """(3, 2) center array ordered NEST, RESOURCE_A, RESOURCE_B."""
    return np.array(
        [arena.nest_center, arena.resource_a_center, arena.resource_b_center]
    )


def classify_points(arena: Arena, pos: np.ndarray) -> np.ndarray:
    """Vectorized ``classify`` for an (N, 2) position array -> (N,) int8.

    Areas are disjoint, so each row matches at most one circle.
    """
    centers = area_centers(arena)
    dx = pos[:, 0, None] - centers[None, :, 0]
    dy = pos[:, 1, None] - centers[None, :, 1]
    inside = (dx * dx + dy * dy) <= arena.area_radius**2
    # Column k holds area code k+1; disjointness makes the sum the code.
    return (inside @ np.array([1, 2, 3], dtype=np.int8)).astype(np.int8)


def closest_resource(arena: Arena, p: tuple[float, float], rng) -> AreaKind:
    """Resource whose center is nearer to ``p``; exact ties fall to a fair
    coin drawn from the run's generator."""
    da = _dist2(p, arena.resource_a_center)
    db = _dist2(p, arena.resource_b_center)
    if da < db:
        return AreaKind.RESOURCE_A
    if db < da:
        return AreaKind.RESOURCE_B
    return AreaKind.RESOURCE_A if rng.random() < 0.5 else AreaKind.RESOURCE_B


def _dist2(p: tuple[float, float], q: tuple[float, float]) -> float:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
