"""The layered counting automaton behind the dynamic programming route.

A state is a pair (layer, level): the level is the current height, the layer
remembers what kind of step got us here (:class:`model.LayerTag`).  Because
the forbidden adjacencies of a model only ever constrain *consecutive* steps,
this one-step memory is enough to decide which steps may come next, so paths
of a model correspond exactly to walks of this automaton from the start
state (F, 0).

The automaton is truncated at a maximum level; walks of length n never pass
level n, so truncating at (or above) the longest path length keeps counting
exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    ENTRY_LAYER,
    LAYER_ORDER,
    STEP_ORDER,
    LayerTag,
    ModelConfig,
    StepKind,
)


@dataclass(frozen=True)
class State:
    layer: LayerTag
    level: int

    def __str__(self):
        return f"{self.layer.value}{self.level}"


def sort_key(state: State):
    return (LAYER_ORDER.index(state.layer), state.level)


def _incoming_kind(state: State):
    # Which step kind must have produced this state.  (F, 0) is special: it
    # is the start state and the target of catastrophes, neither of which
    # constrains the next step (catastrophe-first forbidden pairs are
    # rejected when the config is built).
    if state.layer is LayerTag.F:
        return StepKind.UP if state.level > 0 else None
    if state.layer is LayerTag.G:
        return StepKind.DOWN_BLACK
    return StepKind.DOWN_RED


@dataclass(frozen=True)
class Automaton:
    """Explicit transition table of a model, truncated at ``max_level``."""

    config: ModelConfig
    max_level: int
    start: State
    transitions: dict = field(compare=False)

    def successors(self, state: State) -> tuple:
        """The (step, target) pairs leaving ``state``, in canonical step order."""
        return self.transitions[state]

    def states(self) -> list:
        return sorted(self.transitions, key=sort_key)

    def to_text(self) -> str:
        lines = []
        for st in self.states():
            arrows = " ".join(
                f"{step.value}->{tgt}" for step, tgt in self.successors(st)
            )
            lines.append(f"{st}: {arrows}" if arrows else f"{st}:")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "max_level": self.max_level,
            "start": str(self.start),
            "states": [
                {
                    "id": str(st),
                    "layer": st.layer.value,
                    "level": st.level,
                    "transitions": [
                        {"step": step.value, "to": str(tgt)}
                        for step, tgt in self.successors(st)
                    ],
                }
                for st in self.states()
            ],
        }


def build(config: ModelConfig, max_level: int) -> Automaton:
    """Build the layered automaton of a model.

    From (layer, level) the candidate moves are, in canonical order:

    * up        -> (F, level + 1)   if level < max_level
    * down black-> (G, level - 1)   if level > 0
    * down red  -> (H, level - 1)   if level > 0
    * catastrophe -> (F, 0)         if the rule allows firing from ``level``

    each kept only when the step is in the model and the (incoming, outgoing)
    pair is not forbidden.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    transitions = {}
    for layer in LAYER_ORDER:
        for level in range(max_level + 1):
            st = State(layer, level)
            came_by = _incoming_kind(st)
            out = []
            for step in STEP_ORDER:
                if step not in config.steps:
                    continue
                if came_by is not None and not config.allows_pair(came_by, step):
                    continue
                if step is StepKind.UP:
                    if level < max_level:
                        out.append((step, State(LayerTag.F, level + 1)))
                elif step in (StepKind.DOWN_BLACK, StepKind.DOWN_RED):
                    if level > 0:
                        tgt = ENTRY_LAYER[step]
                        out.append((step, State(tgt, level - 1)))
                else:  # catastrophe
                    if config.catastrophe.allows(level):
                        out.append((step, State(LayerTag.F, 0)))
            transitions[st] = tuple(out)
    return Automaton(config, max_level, State(LayerTag.F, 0), transitions)


def reachable_states(auto: Automaton) -> list:
    """States reachable from the start by following transitions, sorted."""
    seen = {auto.start}
    frontier = [auto.start]
    while frontier:
        nxt = []
        for st in frontier:
            for _, tgt in auto.successors(st):
                if tgt not in seen:
                    seen.add(tgt)
                    nxt.append(tgt)
        frontier = nxt
    return sorted(seen, key=sort_key)
