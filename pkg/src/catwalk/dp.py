"""Exact big-integer path counting by dynamic programming over the automaton.

A :class:`CountTable` holds, for every length ``n <= n_max`` and every
automaton state, the number of paths of length n that end in that state.
The table is filled by one forward sweep; all counts are exact Python ints.

The same table doubles as the data for the recurrence checker
:func:`verify_recurrences`, which re-reads the table as a family of
generating functions per (layer, level) and confirms the step-inflow
identities those series must satisfy.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from . import automaton as automaton_mod
from .automaton import Automaton, State, sort_key
from .model import LayerTag, ModelConfig, StepKind
from .series import Series


class CountTable:
    """Counts of paths by length and end state for one model."""

    def __init__(self, auto: Automaton, slices: list):
        self._auto = auto
        self._slices = slices

    @property
    def config(self) -> ModelConfig:
        return self._auto.config

    @property
    def auto(self) -> Automaton:
        return self._auto

    @property
    def n_max(self) -> int:
        return len(self._slices) - 1

    def _slice(self, n: int) -> dict:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"length {n} outside table range 0..{self.n_max}")
        return self._slices[n]

    def state_count(self, n: int, state: State) -> int:
        return self._slice(n).get(state, 0)

    def level_count(self, n: int, level: int) -> int:
        return sum(c for st, c in self._slice(n).items() if st.level == level)

    def closed_count(self, n: int) -> int:
        return self.level_count(n, 0)

    def open_count(self, n: int) -> int:
        return sum(self._slice(n).values())

    def final_counts(self, n: int) -> dict:
        """All nonzero end-state counts at length n, keyed by State."""
        return dict(self._slice(n))

    def layer_series(self, layer: LayerTag, level: int, order: int | None = None) -> Series:
        """Counts ending in (layer, level) as a power series in the length."""
        if order is None:
            order = self.n_max
        if order > self.n_max:
            raise ValueError(f"order {order} beyond table range {self.n_max}")
        st = State(layer, level)
        return Series([self._slices[n].get(st, 0) for n in range(order + 1)])

    def level_series(self, level: int, order: int | None = None) -> Series:
        """Counts ending at ``level``, all layers merged, as a power series."""
        if order is None:
            order = self.n_max
        if order > self.n_max:
            raise ValueError(f"order {order} beyond table range {self.n_max}")
        return Series(
            [
                sum(c for st, c in self._slices[n].items() if st.level == level)
                for n in range(order + 1)
            ]
        )

    def closed_series(self, order: int | None = None) -> Series:
        return self.level_series(0, order)

    def layer_series_map(self, order: int | None = None) -> dict:
        """All per-(layer, level) series at once, keyed by (LayerTag, level).

        One sweep over the table; prefer this to calling ``layer_series`` in
        a loop over levels.
        """
        if order is None:
            order = self.n_max
        if order > self.n_max:
            raise ValueError(f"order {order} beyond table range {self.n_max}")
        acc: dict = {}
        for n in range(order + 1):
            for st, c in self._slices[n].items():
                key = (st.layer, st.level)
                if key not in acc:
                    acc[key] = [0] * (order + 1)
                acc[key][n] = c
        return {key: Series(lst) for key, lst in acc.items()}

    def level_series_map(self, order: int | None = None) -> dict:
        """Per-level series with layers merged, keyed by level."""
        if order is None:
            order = self.n_max
        if order > self.n_max:
            raise ValueError(f"order {order} beyond table range {self.n_max}")
        acc: dict = {}
        for n in range(order + 1):
            for st, c in self._slices[n].items():
                if st.level not in acc:
                    acc[st.level] = [0] * (order + 1)
                acc[st.level][n] += c
        return {lv: Series(lst) for lv, lst in acc.items()}

    def open_series(self, order: int | None = None) -> Series:
        if order is None:
            order = self.n_max
        if order > self.n_max:
            raise ValueError(f"order {order} beyond table range {self.n_max}")
        return Series([sum(self._slices[n].values()) for n in range(order + 1)])

    def write_csv(self, fileobj) -> None:
        writer = csv.writer(fileobj)
        writer.writerow(["n", "state", "count"])
        for n, sl in enumerate(self._slices):
            for st in sorted(sl, key=sort_key):
                writer.writerow([n, str(st), sl[st]])


def count_table(config: ModelConfig, n_max: int, max_level: int | None = None) -> CountTable:
    """Fill the count table for all lengths up to ``n_max``.

    ``max_level`` defaults to ``n_max``, which is always enough: a path of
    length n cannot climb past level n.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if max_level is None:
        max_level = n_max
    auto = automaton_mod.build(config, max_level)
    cur = {auto.start: 1}
    slices = [dict(cur)]
    for _ in range(n_max):
        nxt: dict = {}
        for st, cnt in cur.items():
            for _step, tgt in auto.successors(st):
                nxt[tgt] = nxt.get(tgt, 0) + cnt
        slices.append(nxt)
        cur = nxt
    return CountTable(auto, slices)


def count_closed(config: ModelConfig, n: int) -> int:
    """Number of length-n paths of the model that end back at level 0."""
    return count_table(config, n).closed_count(n)


def count_open(config: ModelConfig, n: int) -> int:
    """Number of length-n paths of the model, any final level."""
    return count_table(config, n).open_count(n)


def count_level(config: ModelConfig, n: int, level: int) -> int:
    """Number of length-n paths ending exactly at ``level``."""
    if level < 0:
        raise ValueError("level must be >= 0")
    return count_table(config, n).level_count(n, level)


def layer_series(config: ModelConfig, layer: LayerTag, level: int, order: int) -> Series:
    """Generating function of counts ending in (layer, level), up to z^order."""
    return count_table(config, order).layer_series(layer, level, order)


# -- recurrence verification ----------------------------------------------


@dataclass
class RecurrenceCheck:
    name: str
    ok: bool
    detail: str


@dataclass
class RecurrenceReport:
    system: str
    order: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]


class RecurrenceViolation(Exception):
    """A count table does not satisfy the requested recurrence system."""


def _first_mismatch(lhs: Series, rhs: Series):
    for n in range(min(lhs.order, rhs.order) + 1):
        if lhs.coeff(n) != rhs.coeff(n):
            return n, lhs.coeff(n), rhs.coeff(n)
    return None


def _aggregate(name: str, pairs) -> RecurrenceCheck:
    # pairs: iterable of (label, lhs, rhs)
    count = 0
    for label, lhs, rhs in pairs:
        count += 1
        miss = _first_mismatch(lhs, rhs)
        if miss is not None:
            n, a, b = miss
            return RecurrenceCheck(
                name, False, f"fails at {label}, coefficient of z^{n}: {a} != {b}"
            )
    return RecurrenceCheck(name, True, f"{count} instances checked")


def infer_system(config: ModelConfig) -> str:
    """Pick the recurrence family matching a config: layered for red-step
    models, merged single-sequence otherwise."""
    return "skew" if StepKind.DOWN_RED in config.steps else "dyck"


def verify_recurrences(
    config: ModelConfig,
    order: int,
    system: str | None = None,
    strict: bool = True,
) -> RecurrenceReport:
    """Check the step-inflow identities of a model's counting series.

    The "skew" system keeps the three layers separate and checks, writing
    f_i, g_i, h_i for the series of counts ending in (F, i), (G, i), (H, i):

        f_{i+1} = z (f_i + g_i)                 up-steps never follow a red step
        g_i     = z (f_{i+1} + g_{i+1} + h_{i+1})
        h_i     = z (g_{i+1} + h_{i+1})         red steps never follow an up-step
        f_0     = 1 + z * sum of (f_i + g_i + h_i) over catastrophe levels i

    The "dyck" system merges layers into t_i and checks

        t_i = z (t_{i-1} + t_{i+1})   for i >= 1
        t_0 = 1 + z t_1 + z * sum of t_i over catastrophe levels i

    The identities encode the preset adjacency rules, so feeding the wrong
    system to a table (pass ``system=`` explicitly) is a deliberate way to
    watch the check fail.  With ``strict`` a failure raises
    :class:`RecurrenceViolation`; otherwise the report carries the failures.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if system is None:
        system = infer_system(config)
    if system not in ("dyck", "skew"):
        raise ValueError(f"unknown recurrence system {system!r}")

    table = count_table(config, order)
    n = order
    rule = config.catastrophe
    cat_levels = [i for i in range(1, n + 1) if rule.allows(i)]
    z = Series.z(n)
    checks: list = []

    if system == "skew":
        by_key = table.layer_series_map(n)
        nil = Series.zero(n)
        f = [by_key.get((LayerTag.F, i), nil) for i in range(n + 1)]
        g = [by_key.get((LayerTag.G, i), nil) for i in range(n + 1)]
        h = [by_key.get((LayerTag.H, i), nil) for i in range(n + 1)]
        checks.append(
            _aggregate(
                "up-inflow",
                ((f"i={i}", f[i + 1], z * (f[i] + g[i])) for i in range(n)),
            )
        )
        checks.append(
            _aggregate(
                "black-down-inflow",
                ((f"i={i}", g[i], z * (f[i + 1] + g[i + 1] + h[i + 1])) for i in range(n)),
            )
        )
        checks.append(
            _aggregate(
                "red-down-inflow",
                ((f"i={i}", h[i], z * (g[i + 1] + h[i + 1])) for i in range(n)),
            )
        )
        inflow = Series.zero(n)
        for i in cat_levels:
            inflow = inflow + f[i] + g[i] + h[i]
        checks.append(
            _aggregate("axis-boundary", [("f0", f[0], 1 + z * inflow)])
        )
    else:
        by_level = table.level_series_map(n)
        nil = Series.zero(n)
        t = [by_level.get(i, nil) for i in range(n + 1)]
        checks.append(
            _aggregate(
                "interior",
                ((f"i={i}", t[i], z * (t[i - 1] + t[i + 1])) for i in range(1, n)),
            )
        )
        inflow = Series.zero(n)
        for i in cat_levels:
            inflow = inflow + t[i]
        checks.append(
            _aggregate("axis-boundary", [("t0", t[0], 1 + z * t[1] + z * inflow)])
        )

    report = RecurrenceReport(system, order, checks)
    if strict and not report.ok:
        first = report.failures()[0]
        raise RecurrenceViolation(f"{first.name}: {first.detail}")
    return report
