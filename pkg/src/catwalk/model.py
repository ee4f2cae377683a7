"""Step alphabet, model configurations, and path validation.

Paths live on the non-negative integers, starting at level 0.  Four step
kinds exist:

* ``UP`` rises by 1,
* ``DOWN_BLACK`` falls by 1 (the plain down-step),
* ``DOWN_RED`` falls by 1 (the marked down-step of the skew models),
* ``CATASTROPHE`` jumps from a qualifying level straight back to 0.

A :class:`ModelConfig` selects a subset of the alphabet, forbids chosen
adjacent step pairs, and fixes the catastrophe rule (which levels may fire
one).  Four presets cover the path languages this package enumerates:
plain Dyck-style paths and skew (red-step) paths, each with and without
catastrophes.  In the skew presets a red step may neither follow nor be
followed by an up-step; that adjacency restriction is exactly what makes
the red model a faithful relabelling of non-crossing geometric paths
(see ``brute.enumerate_geometric``).
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union


class StepKind(Enum):
    UP = "up"
    DOWN_BLACK = "down_black"
    DOWN_RED = "down_red"
    CATASTROPHE = "catastrophe"


# canonical order, also the lexicographic order used by the enumerators
STEP_ORDER = (
    StepKind.UP,
    StepKind.DOWN_BLACK,
    StepKind.DOWN_RED,
    StepKind.CATASTROPHE,
)

_STEP_CHAR = {
    StepKind.UP: "U",
    StepKind.DOWN_BLACK: "D",
    StepKind.DOWN_RED: "R",
    StepKind.CATASTROPHE: "C",
}
_CHAR_STEP = {c: s for s, c in _STEP_CHAR.items()}


class LayerTag(Enum):
    """Memory of the last step kind, as used by the layered automaton.

    F: at the start, after an up-step, or after a catastrophe.
    G: after a black down-step.
    H: after a red down-step.
    """

    F = "F"
    G = "G"
    H = "H"


LAYER_ORDER = (LayerTag.F, LayerTag.G, LayerTag.H)

# layer a path is in right after taking a step of the given kind
ENTRY_LAYER = {
    StepKind.UP: LayerTag.F,
    StepKind.CATASTROPHE: LayerTag.F,
    StepKind.DOWN_BLACK: LayerTag.G,
    StepKind.DOWN_RED: LayerTag.H,
}


class ConfigError(ValueError):
    """A model configuration that the package cannot represent."""


@dataclass(frozen=True)
class CatastropheRule:
    """Which levels are allowed to fire a catastrophe.

    ``kind`` is one of "none", "min_level" (every level >= k), "even_min"
    (every even level >= k), or "levels" (an explicit finite set).  Level 0
    can never fire one: a catastrophe must actually fall.
    """

    kind: str
    k: int = 0
    levels: frozenset = frozenset()

    def __post_init__(self):
        if self.kind == "none":
            pass
        elif self.kind in ("min_level", "even_min"):
            if self.k < 1:
                raise ConfigError(f"{self.kind} rule needs a threshold k >= 1")
        elif self.kind == "levels":
            object.__setattr__(self, "levels", frozenset(self.levels))
            if any(lv < 1 for lv in self.levels):
                raise ConfigError("explicit catastrophe levels must all be >= 1")
        else:
            raise ConfigError(f"unknown catastrophe rule kind {self.kind!r}")

    @classmethod
    def none(cls) -> "CatastropheRule":
        return cls("none")

    @classmethod
    def min_level(cls, k: int) -> "CatastropheRule":
        return cls("min_level", k=k)

    @classmethod
    def even_min(cls, k: int) -> "CatastropheRule":
        return cls("even_min", k=k)

    @classmethod
    def explicit(cls, levels: Iterable[int]) -> "CatastropheRule":
        return cls("levels", levels=frozenset(levels))

    def allows(self, level: int) -> bool:
        """True if a catastrophe may start from ``level``."""
        if level < 1:
            return False
        if self.kind == "none":
            return False
        if self.kind == "min_level":
            return level >= self.k
        if self.kind == "even_min":
            return level >= self.k and level % 2 == 0
        return level in self.levels

    def to_json(self) -> dict:
        if self.kind == "none":
            return {"kind": "none"}
        if self.kind in ("min_level", "even_min"):
            return {"kind": self.kind, "k": self.k}
        return {"kind": "levels", "levels": sorted(self.levels)}

    @classmethod
    def from_json(cls, data: dict) -> "CatastropheRule":
        kind = data.get("kind")
        if kind == "none":
            return cls.none()
        if kind == "min_level":
            return cls.min_level(data["k"])
        if kind == "even_min":
            return cls.even_min(data["k"])
        if kind == "levels":
            return cls.explicit(data["levels"])
        raise ConfigError(f"unknown catastrophe rule kind {kind!r}")


@dataclass(frozen=True)
class ModelConfig:
    """An immutable path model: step set, forbidden adjacencies, catastrophe rule."""

    steps: frozenset
    forbidden_pairs: frozenset
    catastrophe: CatastropheRule = CatastropheRule.none()

    def __post_init__(self):
        object.__setattr__(self, "steps", frozenset(self.steps))
        object.__setattr__(
            self, "forbidden_pairs", frozenset(tuple(p) for p in self.forbidden_pairs)
        )
        for s in self.steps:
            if not isinstance(s, StepKind):
                raise ConfigError(f"not a step kind: {s!r}")
        for pair in self.forbidden_pairs:
            if len(pair) != 2 or not all(isinstance(s, StepKind) for s in pair):
                raise ConfigError(f"forbidden pair must be two step kinds, got {pair!r}")
            if pair[0] is StepKind.CATASTROPHE:
                # The layered state space remembers "after a catastrophe" and
                # "path start" as the same thing, so a restriction that applies
                # only after catastrophes cannot be represented.
                raise ConfigError(
                    "forbidden pairs starting with a catastrophe are not supported"
                )

    def allows_pair(self, first: StepKind, second: StepKind) -> bool:
        return (first, second) not in self.forbidden_pairs

    def to_json(self) -> dict:
        return {
            "steps": [s.value for s in STEP_ORDER if s in self.steps],
            "forbidden_pairs": sorted(
                [a.value, b.value] for a, b in self.forbidden_pairs
            ),
            "catastrophe": self.catastrophe.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ModelConfig":
        try:
            steps = frozenset(StepKind(s) for s in data["steps"])
            pairs = frozenset(
                (StepKind(a), StepKind(b)) for a, b in data["forbidden_pairs"]
            )
            rule = CatastropheRule.from_json(data["catastrophe"])
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed model configuration: {exc}") from exc
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return cls(steps, pairs, rule)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "ModelConfig":
        return cls.from_json(json.loads(text))


def with_rule(config: ModelConfig, rule: CatastropheRule) -> ModelConfig:
    """A copy of ``config`` with a different catastrophe rule."""
    return dataclasses.replace(config, catastrophe=rule)


# -- presets ---------------------------------------------------------------

DYCK = ModelConfig(
    frozenset({StepKind.UP, StepKind.DOWN_BLACK}),
    frozenset(),
    CatastropheRule.none(),
)

DYCK_CAT = ModelConfig(
    frozenset({StepKind.UP, StepKind.DOWN_BLACK, StepKind.CATASTROPHE}),
    frozenset(),
    CatastropheRule.min_level(2),
)

SKEW = ModelConfig(
    frozenset({StepKind.UP, StepKind.DOWN_BLACK, StepKind.DOWN_RED}),
    frozenset(
        {
            (StepKind.UP, StepKind.DOWN_RED),
            (StepKind.DOWN_RED, StepKind.UP),
        }
    ),
    CatastropheRule.none(),
)

SKEW_CAT = ModelConfig(
    frozenset({StepKind.UP, StepKind.DOWN_BLACK, StepKind.DOWN_RED, StepKind.CATASTROPHE}),
    frozenset(
        {
            (StepKind.UP, StepKind.DOWN_RED),
            (StepKind.DOWN_RED, StepKind.UP),
        }
    ),
    CatastropheRule.min_level(2),
)

PRESETS = {
    "dyck": DYCK,
    "dyck-cat": DYCK_CAT,
    "skew": SKEW,
    "skew-cat": SKEW_CAT,
}


def preset(name: str) -> ModelConfig:
    """Look up a preset by name; underscores and hyphens are interchangeable."""
    key = name.replace("_", "-").lower()
    if key not in PRESETS:
        raise ConfigError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
        )
    return PRESETS[key]


# -- paths -----------------------------------------------------------------


class PathError(ValueError):
    """A step sequence that is not a path of the given model.

    ``index`` is the position of the offending step.
    """

    def __init__(self, message: str, index: int):
        super().__init__(f"step {index}: {message}")
        self.index = index


class IllegalStep(PathError):
    pass


class NegativeLevel(PathError):
    pass


class ForbiddenAdjacency(PathError):
    pass


class IllegalCatastrophe(PathError):
    pass


@dataclass(frozen=True)
class Path:
    """A validated step sequence together with its level trace.

    ``levels`` has one more entry than ``steps``: ``levels[i]`` is the level
    before step i, and ``levels[-1]`` the final level.
    """

    config: ModelConfig
    steps: tuple
    levels: tuple

    def __len__(self):
        return len(self.steps)

    @property
    def final_level(self) -> int:
        return self.levels[-1]

    @property
    def is_closed(self) -> bool:
        return self.final_level == 0

    @property
    def final_layer(self) -> LayerTag:
        if not self.steps:
            return LayerTag.F
        return ENTRY_LAYER[self.steps[-1]]

    def __str__(self):
        return "".join(_STEP_CHAR[s] for s in self.steps)

    def to_json(self) -> list:
        return [s.value for s in self.steps]


def validate_path(config: ModelConfig, steps: Sequence[StepKind]) -> Path:
    """Check a step sequence against a model and return the validated Path.

    Raises a :class:`PathError` subclass naming the first offending step:
    IllegalStep for a step kind outside the model, NegativeLevel for a
    down-step from level 0, ForbiddenAdjacency for a banned step pair, and
    IllegalCatastrophe for a catastrophe from a non-qualifying level.
    """
    level = 0
    levels = [0]
    prev = None
    for i, s in enumerate(steps):
        if not isinstance(s, StepKind):
            raise IllegalStep(f"not a step kind: {s!r}", i)
        if s not in config.steps:
            raise IllegalStep(f"{s.value} is not in this model", i)
        if prev is not None and not config.allows_pair(prev, s):
            raise ForbiddenAdjacency(f"{prev.value} may not be followed by {s.value}", i)
        if s is StepKind.UP:
            level += 1
        elif s in (StepKind.DOWN_BLACK, StepKind.DOWN_RED):
            if level == 0:
                raise NegativeLevel(f"{s.value} from level 0", i)
            level -= 1
        else:  # catastrophe
            if not config.catastrophe.allows(level):
                raise IllegalCatastrophe(
                    f"catastrophe from level {level} is not allowed here", i
                )
            level = 0
        levels.append(level)
        prev = s
    return Path(config, tuple(steps), tuple(levels))


def is_valid(config: ModelConfig, steps: Sequence[StepKind]) -> bool:
    try:
        validate_path(config, steps)
    except PathError:
        return False
    return True


def level_trace(config: ModelConfig, steps: Sequence[StepKind]) -> tuple:
    """The sequence of levels visited by a step sequence (validating it first)."""
    return validate_path(config, steps).levels


def parse_steps(text: str) -> tuple:
    """Parse a compact path string like "UUUUDRC" into step kinds."""
    out = []
    for i, ch in enumerate(text.strip().upper()):
        if ch not in _CHAR_STEP:
            raise ValueError(f"character {i} ({ch!r}) is not one of U, D, R, C")
        out.append(_CHAR_STEP[ch])
    return tuple(out)


def step_char(step: StepKind) -> str:
    return _STEP_CHAR[step]


FinalSpec = Union[None, int, str]


def normalize_final(final: FinalSpec):
    """Normalize an end-condition spec to None (any end), or an int level.

    Accepts None, "all"/"open"/"any", "closed", or a level number.
    """
    if final is None:
        return None
    if isinstance(final, int):
        if final < 0:
            raise ValueError("final level must be >= 0")
        return final
    key = final.strip().lower()
    if key in ("all", "open", "any", "*"):
        return None
    if key == "closed":
        return 0
    if key.isdigit():
        return int(key)
    raise ValueError(f"cannot interpret end condition {final!r}")
