"""Run configuration: typed parameters, flat key=value files, validation."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from pathlib import Path


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending key."""


class Mode(str, Enum):
    """Which subsystems are active during a run."""

    FORAGING = "foraging"
    MEAN_FIELD = "mean_field"
    LOCKED_POPULATIONS = "locked_populations"
    RANDOM_WALK_REFERENCE = "random_walk_reference"
    COMMITMENT_ONLY = "commitment_only"


class Variant(str, Enum):
    """How new words enter the game."""

    CLASSIC = "classic"  # created by a speaker with an empty inventory
    SPATIAL = "spatial"  # created on entering a resource with an empty inventory


@dataclass(frozen=True)
class RunConfig:
    n_robots: int = 50
    area_radius: float = 0.3  # meters, all three areas
    nest_distance: float = 2.5  # meters, nest center to each resource center
    dt: float = 0.1  # seconds per control step; also the broadcast cadence
    speed: float = 0.1  # m/s
    comm_radius: float = 0.2  # meters
    warmup_s: float = 200.0
    horizon_s: float = 12000.0
    p_speak: float = 0.001  # per robot per step
    p_recruit: float = 0.7  # per processed beacon
    p_cross_inhibit: float = 0.7  # per processed beacon
    p_abandon: float = 0.0  # per step
    p_return: float = 0.0005  # per step, uncommitted explorers only
    turn_sigma: float = 0.3  # rad per step, correlated random walk
    avoid_radius: float = 0.1  # meters, short-range repulsion
    nest_turn_radius: float = 0.11  # meters: committed robots turn around
    # once within this distance of the nest center; keeps the two committed
    # streams mostly apart so opposing beacon contacts stay rare events
    variant: str = Variant.CLASSIC.value
    mode: str = Mode.FORAGING.value
    seed: int = 0
    snapshot_every_s: float = 10.0  # population snapshot cadence
    neighborhood_every_s: float = 1.0  # neighborhood sample cadence, 0 disables
    locked_n_a: int = 25  # locked_populations mode: robots pinned to resource A

    def validate(self) -> None:
        """Raise ConfigError naming the first offending key."""
        if self.n_robots < 1:
            raise ConfigError("n_robots: must be >= 1")
        for key in ("area_radius", "nest_distance", "dt", "speed"):
            if getattr(self, key) < 0:
                raise ConfigError(f"{key}: must be >= 0")
        if self.area_radius <= 0:
            raise ConfigError("area_radius: must be > 0")
        if self.dt <= 0:
            raise ConfigError("dt: must be > 0")
        if self.nest_distance <= 2 * self.area_radius:
            raise ConfigError(
                "nest_distance: must exceed 2 * area_radius so areas are disjoint"
            )
        for key in ("p_speak", "p_recruit", "p_cross_inhibit", "p_abandon", "p_return"):
            p = getattr(self, key)
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"{key}: probability must lie in [0, 1]")
        if self.comm_radius < 0:
            raise ConfigError("comm_radius: must be >= 0")
        if self.avoid_radius < 0:
            raise ConfigError("avoid_radius: must be >= 0")
        if self.turn_sigma < 0:
            raise ConfigError("turn_sigma: must be >= 0")
        if not 0 <= self.nest_turn_radius < self.area_radius:
            raise ConfigError("nest_turn_radius: must lie in [0, area_radius)")
        if self.warmup_s < 0:
            raise ConfigError("warmup_s: must be >= 0")
        if self.horizon_s <= self.warmup_s:
            raise ConfigError("horizon_s: must exceed warmup_s")
        if self.variant not in {v.value for v in Variant}:
            raise ConfigError(
                f"variant: unknown value {self.variant!r}; "
                f"expected one of {sorted(v.value for v in Variant)}"
            )
        if self.mode not in {m.value for m in Mode}:
            raise ConfigError(
                f"mode: unknown value {self.mode!r}; "
                f"expected one of {sorted(m.value for m in Mode)}"
            )
        if self.snapshot_every_s <= 0:
            raise ConfigError("snapshot_every_s: must be > 0")
        if self.neighborhood_every_s < 0:
            raise ConfigError("neighborhood_every_s: must be >= 0")
        if self.mode == Mode.LOCKED_POPULATIONS.value and not (
            0 <= self.locked_n_a <= self.n_robots
        ):
            raise ConfigError("locked_n_a: must lie in [0, n_robots]")

    def replace(self, **changes) -> "RunConfig":
        cfg = dataclasses.replace(self, **changes)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(RunConfig)}
_INT_KEYS = {"n_robots", "seed", "locked_n_a"}
_STR_KEYS = {"variant", "mode"}


def parse_value(key: str, raw: str):
    """Parse a config value string according to the key's declared type."""
    if key not in _FIELD_TYPES:
        raise ConfigError(f"unknown config key: {key!r}")
    raw = raw.strip()
    try:
        if key in _STR_KEYS:
            return raw
        if key in _INT_KEYS:
            return int(raw)
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: cannot parse value {raw!r}") from exc


def load_config(path: str | Path, overrides: dict | None = None) -> RunConfig:
    """Load a flat ``key = value`` config file.

    Blank lines and ``#`` comments are allowed; unknown keys are errors.
    """
    values: dict = {}
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        values[key] = parse_value(key, raw)
    if overrides:
        for key, val in overrides.items():
            if key not in _FIELD_TYPES:
                raise ConfigError(f"unknown config key: {key!r}")
            values[key] = val
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg
