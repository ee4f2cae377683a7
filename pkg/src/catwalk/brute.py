"""Brute-force enumeration: the ground truth the faster routes answer to.

Two independent enumerators live here.  :func:`enumerate_red` walks step
sequences of a :class:`model.ModelConfig` directly, using only the model's
own validation rules.  :func:`enumerate_geometric` knows nothing about
models: it enumerates genuinely two-dimensional paths built from north-east,
south-east and south-west unit steps that never cross themselves, the
geometric picture behind the red-step relabelling.  :func:`models_agree`
confirms the two pictures count (and mean) the same thing.

Everything here is exponential on purpose; the size guards keep calls
honest rather than fast.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    STEP_ORDER,
    FinalSpec,
    ModelConfig,
    Path,
    SKEW,
    StepKind,
    normalize_final,
)

RED_LIMIT = 20
GEO_LIMIT = 16

# geometric step vectors, in an order mirroring the step order of the
# red model: north-east ~ up, south-east ~ down black, south-west ~ down red
NE = (1, 1)
SE = (1, -1)
SW = (-1, -1)
GEO_STEPS = (NE, SE, SW)

_RED_TO_GEO = {
    StepKind.UP: NE,
    StepKind.DOWN_BLACK: SE,
    StepKind.DOWN_RED: SW,
}


class SizeGuard(ValueError):
    """Refusal to brute-force an instance past the documented limit."""


def enumerate_red(config: ModelConfig, n: int, final: FinalSpec = None) -> list:
    """All length-n paths of the model, in lexicographic step order.

    The order of the step alphabet is U < D < R < C.  ``final`` restricts
    the final level (None or "all" for no restriction, "closed" or 0 for the
    axis, any int for that level).  Validation logic is deliberately local:
    the walk tracks level and previous step itself instead of calling the
    automaton, so the result is independent of the DP route.
    """
    if n < 0:
        raise ValueError("path length must be >= 0")
    if n > RED_LIMIT:
        raise SizeGuard(f"refusing brute-force enumeration past n={RED_LIMIT}")
    want = normalize_final(final)
    steps = [s for s in STEP_ORDER if s in config.steps]
    rule = config.catastrophe
    pairs = config.forbidden_pairs
    out: list = []
    seq: list = []
    levels = [0]

    def walk(level: int, prev) -> None:
        if len(seq) == n:
            if want is None or level == want:
                out.append(Path(config, tuple(seq), tuple(levels)))
            return
        for s in steps:
            if prev is not None and (prev, s) in pairs:
                continue
            if s is StepKind.UP:
                nxt = level + 1
            elif s in (StepKind.DOWN_BLACK, StepKind.DOWN_RED):
                if level == 0:
                    continue
                nxt = level - 1
            else:
                if not rule.allows(level):
                    continue
                nxt = 0
            seq.append(s)
            levels.append(nxt)
            walk(nxt, s)
            seq.pop()
            levels.pop()

    walk(0, None)
    return out


@dataclass(frozen=True)
class GeoPath:
    """A two-dimensional path as its vertex list, starting at (0, 0)."""

    vertices: tuple

    @property
    def final_height(self) -> int:
        return self.vertices[-1][1]

    @property
    def steps(self) -> tuple:
        vs = self.vertices
        return tuple(
            (vs[i + 1][0] - vs[i][0], vs[i + 1][1] - vs[i][1])
            for i in range(len(vs) - 1)
        )

    def __len__(self):
        return len(self.vertices) - 1


def enumerate_geometric(n: int, final: FinalSpec = None) -> list:
    """All length-n non-self-crossing paths from (0,0) over {NE, SE, SW}.

    Paths stay at height >= 0 and may not traverse the same ground twice:
    no two steps may cover the same segment of the plane, in either
    direction.  Sharing vertices is fine (SE then SW makes a perfectly
    legal spike).  Overlap is detected by segment midpoints: in doubled
    coordinates every unit segment has an integer midpoint that identifies
    it regardless of direction.
    """
    if n < 0:
        raise ValueError("path length must be >= 0")
    if n > GEO_LIMIT:
        raise SizeGuard(f"refusing geometric enumeration past n={GEO_LIMIT}")
    want = normalize_final(final)
    out: list = []
    verts = [(0, 0)]
    used: set = set()

    def walk(x: int, y: int) -> None:
        if len(verts) == n + 1:
            if want is None or y == want:
                out.append(GeoPath(tuple(verts)))
            return
        for dx, dy in GEO_STEPS:
            ny = y + dy
            if ny < 0:
                continue
            mid = (2 * x + dx, 2 * y + dy)
            if mid in used:
                continue
            used.add(mid)
            verts.append((x + dx, ny))
            walk(x + dx, ny)
            verts.pop()
            used.remove(mid)

    walk(0, 0)
    return out


def red_to_geometric(path: Path) -> GeoPath:
    """Relabel a red-model path (no catastrophes) into its geometric form."""
    x, y = 0, 0
    verts = [(0, 0)]
    for s in path.steps:
        if s not in _RED_TO_GEO:
            raise ValueError(f"step {s.value} has no geometric counterpart")
        dx, dy = _RED_TO_GEO[s]
        x, y = x + dx, y + dy
        verts.append((x, y))
    return GeoPath(tuple(verts))


def models_agree(n: int, final: FinalSpec = None) -> bool:
    """Do the red and geometric enumerations of length n match exactly?

    Checks that relabelling the red paths yields precisely the set of
    geometric paths, with no collisions, and that the per-final-level
    census is identical.
    """
    red = enumerate_red(SKEW, n, final)
    geo = enumerate_geometric(n, final)
    mapped = [red_to_geometric(p) for p in red]
    if len(set(mapped)) != len(mapped):
        return False
    if set(mapped) != set(geo):
        return False
    by_level_red: dict = {}
    for p in red:
        by_level_red[p.final_level] = by_level_red.get(p.final_level, 0) + 1
    by_level_geo: dict = {}
    for p in geo:
        by_level_geo[p.final_height] = by_level_geo.get(p.final_height, 0) + 1
    return by_level_red == by_level_geo
