"""Environment and search configuration.

Defaults follow the public benchmark scale (3 feature axes, 3 stones, 12
potions, 10 trials of 20 steps).  ``reduced_config`` returns the 2-axis
desk-scale setup used by the exact-belief model and the acceptance runs.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from alchemyplan.errors import ConfigError

DEFAULT_REWARD_TABLES = {
    2: {0: -3.0, 1: -1.0, 2: 15.0},
    3: {0: -3.0, 1: -1.0, 2: 1.0, 3: 15.0},
}


def default_reward_table(num_feature_axes: int) -> dict[int, float]:
    return dict(DEFAULT_REWARD_TABLES[num_feature_axes])


@dataclass(frozen=True)
class EnvConfig:
    """Scale and reward parameters of the hidden-chemistry environment."""

    num_feature_axes: int = 3
    num_stones_per_trial: int = 3
    num_potions_per_trial: int = 12
    num_trials: int = 10
    steps_per_trial: int = 20
    reward_table: tuple[float, ...] = ()  # value for each count of positive latent axes
    edge_deletion_enabled: bool = True
    feature_values: tuple[float, float] = (-1.0, 1.0)
    seed: int = 0

    def __post_init__(self):
        if not self.reward_table:
            table = default_reward_table(self.num_feature_axes)
            object.__setattr__(
                self, "reward_table", tuple(table[k] for k in range(self.num_feature_axes + 1))
            )
        self.validate()

    def validate(self) -> None:
        if self.num_feature_axes not in (2, 3):
            raise ConfigError(f"num_feature_axes must be 2 or 3, got {self.num_feature_axes}")
        if self.num_trials < 1 or self.steps_per_trial < 1:
            raise ConfigError("num_trials and steps_per_trial must be >= 1")
        if self.num_stones_per_trial < 1 or self.num_potions_per_trial < 1:
            raise ConfigError("stone and potion counts must be >= 1")
        if len(self.reward_table) != self.num_feature_axes + 1:
            raise ConfigError(
                f"reward_table needs {self.num_feature_axes + 1} entries "
                f"(one per count of positive axes), got {len(self.reward_table)}"
            )
        if self.feature_values[0] >= self.feature_values[1]:
            raise ConfigError("feature_values must be (low, high) with low < high")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must fit in 64 unsigned bits")

    # Derived sizes -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return 1 << self.num_feature_axes

    @property
    def num_colors(self) -> int:
        return 2 * self.num_feature_axes

    @property
    def num_edges(self) -> int:
        return self.num_feature_axes * (1 << (self.num_feature_axes - 1))

    @property
    def episode_steps(self) -> int:
        return self.num_trials * self.steps_per_trial

    @property
    def obs_dim(self) -> int:
        """Length of the flat observation vector (see layout in env.py)."""
        per_stone = self.num_feature_axes + 2  # features, reward, collected
        return self.num_stones_per_trial * per_stone + self.num_potions_per_trial * 2 + 1

    @property
    def num_actions(self) -> int:
        s, p = self.num_stones_per_trial, self.num_potions_per_trial
        return 1 + s + s * p

    def config_hash(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {
            "num_feature_axes": self.num_feature_axes,
            "num_stones_per_trial": self.num_stones_per_trial,
            "num_potions_per_trial": self.num_potions_per_trial,
            "num_trials": self.num_trials,
            "steps_per_trial": self.steps_per_trial,
            "reward_table": list(self.reward_table),
            "edge_deletion_enabled": self.edge_deletion_enabled,
            "feature_values": list(self.feature_values),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EnvConfig":
        kwargs = dict(data)
        if "reward_table" in kwargs:
            kwargs["reward_table"] = tuple(float(v) for v in kwargs["reward_table"])
        if "feature_values" in kwargs:
            kwargs["feature_values"] = tuple(float(v) for v in kwargs["feature_values"])
        unknown = set(kwargs) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "EnvConfig":
        """Read a plain KEY=VALUE file; '#' starts a comment.

        reward_table uses 'class:value' pairs, e.g. ``reward_table=0:-3,1:-1,2:15``;
        feature_values is a 'low,high' pair.
        """
        data: dict = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected KEY=VALUE, got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            data[key] = _parse_value(key, value)
        if "reward_table" in data:
            pairs = data["reward_table"]
            table = [0.0] * (int(data.get("num_feature_axes", 3)) + 1)
            for k, v in pairs:
                table[k] = v
            data["reward_table"] = table
        return cls.from_dict(data)

    def with_overrides(self, **kwargs) -> "EnvConfig":
        return replace(self, **kwargs)


def _parse_value(key: str, value: str):
    if key == "reward_table":
        pairs = []
        for item in value.split(","):
            k, v = item.split(":")
            pairs.append((int(k), float(v)))
        return pairs
    if key == "feature_values":
        lo, hi = value.split(",")
        return [float(lo), float(hi)]
    if key == "edge_deletion_enabled":
        lowered = value.lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"bad boolean for {key}: {value!r}")
    return int(value)


def reduced_config(**overrides) -> EnvConfig:
    """Desk-scale 2-axis configuration: enumerable chemistry space, short episodes."""
    base = dict(
        num_feature_axes=2,
        num_stones_per_trial=2,
        num_potions_per_trial=6,
        num_trials=5,
        steps_per_trial=8,
    )
    base.update(overrides)
    return EnvConfig(**base)


@dataclass(frozen=True)
class SearchConfig:
    """Tree-search hyperparameters (defaults from the tuned benchmark run)."""

    gamma: float = 0.99
    branching_k: int = 3
    c1: float = 0.57
    c2: float = 16.15
    temperature: float = 0.55
    num_expansions: int = 256

    def __post_init__(self):
        if not 0 < self.gamma <= 1:
            raise ConfigError("gamma must be in (0, 1]")
        if self.branching_k < 1:
            raise ConfigError("branching_k must be >= 1")
        if self.temperature <= 0:
            raise ConfigError("temperature must be > 0")
        if self.c2 <= 0:
            raise ConfigError("c2 must be > 0")
        if self.num_expansions < 1:
            raise ConfigError("num_expansions must be >= 1")
