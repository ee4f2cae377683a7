"""Cross-route verification suites.

Each suite bundles checks that pit independent computation routes against
each other: closed forms against the dynamic programming table, both
against brute-force enumeration, the kernel roots against the kernel, and
the low-order coefficients against externally published sequences.  A
report is a flat list of named pass/fail checks plus timing, ready for
text or JSON output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import brute, closedform as cf, dp
from .model import (
    CatastropheRule,
    DYCK,
    DYCK_CAT,
    LayerTag,
    PRESETS,
    SKEW,
    SKEW_CAT,
    with_rule,
)
from .series import Series


@dataclass
class Check:
    name: str
    ok: bool
    detail: str


@dataclass
class SuiteReport:
    suite: str
    checks: list
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": "pass" if c.ok else "fail", "detail": c.detail}
                for c in self.checks
            ],
            "elapsed_ms": self.elapsed_ms,
        }


def _series_check(name: str, lhs: Series, rhs: Series, detail_ok: str) -> Check:
    top = min(lhs.order, rhs.order)
    for n in range(top + 1):
        if lhs.coeff(n) != rhs.coeff(n):
            return Check(
                name, False, f"coefficient of z^{n} differs: {lhs.coeff(n)} != {rhs.coeff(n)}"
            )
    return Check(name, True, detail_ok)


def _suite_kernel(order: int, max_n: int) -> list:
    checks = []
    for model in cf.MODELS:
        res = cf.kernel_residual(model, order)
        checks.append(
            Check(
                f"kernel-root-{model}",
                res.is_zero(),
                f"K(r2) vanishes through z^{order}"
                if res.is_zero()
                else f"K(r2) nonzero at z^{res.valuation()}",
            )
        )
        # 1/r1 is a root of the reciprocal kernel:  low v^2 - mid v + z = 0
        # (recover low and mid by evaluating the kernel at u = 0 and u = 1)
        q = cf.inv_r1(model, order)
        z = Series.z(order)
        low = cf.kernel_at(model, Series.zero(order))
        mid = low + z - cf.kernel_at(model, Series.one(order))
        rec = low * q * q - mid * q + z
        checks.append(
            Check(
                f"reciprocal-root-{model}",
                rec.is_zero(),
                f"reciprocal kernel vanishes at 1/r1 through z^{order}"
                if rec.is_zero()
                else f"nonzero at z^{rec.valuation()}",
            )
        )
    return checks


def _suite_recurrences(order: int, max_n: int) -> list:
    checks = []
    for name, config in sorted(PRESETS.items()):
        report = dp.verify_recurrences(config, order, strict=False)
        if report.ok:
            detail = f"{report.system} system holds through z^{order}"
        else:
            first = report.failures()[0]
            detail = f"{first.name}: {first.detail}"
        checks.append(Check(f"recurrences-{name}", report.ok, detail))
    return checks


def _state_census(paths) -> dict:
    out: dict = {}
    for p in paths:
        key = (p.final_layer, p.final_level)
        out[key] = out.get(key, 0) + 1
    return out


def _suite_oracle(order: int, max_n: int) -> list:
    checks = []
    variants = dict(sorted(PRESETS.items()))
    variants["dyck-cat-even"] = with_rule(DYCK_CAT, CatastropheRule.even_min(2))
    variants["skew-cat-even"] = with_rule(SKEW_CAT, CatastropheRule.even_min(2))
    for name, config in variants.items():
        table = dp.count_table(config, max_n)
        bad = None
        for n in range(max_n + 1):
            census = _state_census(brute.enumerate_red(config, n))
            from_dp = {
                (st.layer, st.level): c for st, c in table.final_counts(n).items()
            }
            if census != from_dp:
                bad = n
                break
        checks.append(
            Check(
                f"oracle-{name}",
                bad is None,
                f"enumeration matches table for n <= {max_n}"
                if bad is None
                else f"census mismatch at n={bad}",
            )
        )
    geo_cap = min(max_n, 12)
    bad = None
    for n in range(geo_cap + 1):
        if not brute.models_agree(n):
            bad = n
            break
    checks.append(
        Check(
            "oracle-geometric",
            bad is None,
            f"red and geometric enumerations agree for n <= {geo_cap}"
            if bad is None
            else f"disagree at n={bad}",
        )
    )
    return checks


def _suite_theorem(order: int, max_n: int) -> list:
    checks = []
    n = order
    z = Series.z(n)
    two_m_z2 = Series([2, 0, -1], order=n)
    r2 = cf.r2("skew", n)
    q = cf.inv_r1("skew", n)
    f0 = cf.f0("skew", n)
    j_top = 10

    # ladder between consecutive level series, multiplied out to avoid 1/r1
    fj = [f0]
    for _ in range(j_top + 1):
        fj.append(fj[-1] * q)
    bad = None
    for j in range(j_top + 1):
        if two_m_z2 * fj[j + 1] != (r2 * fj[j]).truncate(n):
            bad = j
            break
    checks.append(
        Check(
            "level-ladder",
            bad is None,
            f"(2 - z^2) f_(j+1) == r2 f_j for j <= {j_top}"
            if bad is None
            else f"fails at j={bad}",
        )
    )

    gj = [(r2 - z) * f0 * q]
    hj = [(r2 - 2 * z) * f0 * q]
    for _ in range(j_top):
        gj.append(gj[-1] * q)
        hj.append(hj[-1] * q)
    bad = None
    for j in range(j_top + 1):
        if hj[j] != gj[j] - z * fj[j + 1]:
            bad = j
            break
    checks.append(
        Check(
            "channel-difference",
            bad is None,
            f"h_j == g_j - z f_(j+1) for j <= {j_top}" if bad is None else f"fails at j={bad}",
        )
    )

    checks.append(
        _series_check(
            "g0-elimination",
            cf.g0_via_elimination(n),
            gj[0],
            f"both g0 routes agree through z^{n}",
        )
    )
    checks.append(
        _series_check(
            "axis-sum",
            cf.fgh0(n),
            f0 + gj[0] + hj[0],
            f"fgh0 == f0 + g0 + h0 through z^{n}",
        )
    )
    sf, sg, sh = cf.tail_sums(n)
    checks.append(
        _series_check(
            "axis-boundary-tails",
            f0,
            1 + z * (sf + sg + sh),
            f"f0 == 1 + z (tail sums) through z^{n}",
        )
    )

    dyck_table = dp.count_table(DYCK_CAT, n)
    skew_table = dp.count_table(SKEW_CAT, n)
    layers = skew_table.layer_series_map(n)
    nil = Series.zero(n)
    checks.append(
        _series_check(
            "dp-axis-dyck",
            cf.f0("dyck", n),
            dyck_table.closed_series(n),
            f"closed form matches table through z^{n}",
        )
    )
    checks.append(
        _series_check(
            "dp-open-dyck",
            cf.open_total("dyck", n),
            dyck_table.open_series(n),
            f"closed form matches table through z^{n}",
        )
    )
    for label, series, key in (
        ("dp-f0-skew", f0, (LayerTag.F, 0)),
        ("dp-g0-skew", gj[0], (LayerTag.G, 0)),
        ("dp-h0-skew", hj[0], (LayerTag.H, 0)),
    ):
        checks.append(
            _series_check(
                label,
                series,
                layers.get(key, nil),
                f"closed form matches table through z^{n}",
            )
        )
    checks.append(
        _series_check(
            "dp-axis-skew",
            cf.fgh0(n),
            skew_table.closed_series(n),
            f"closed form matches table through z^{n}",
        )
    )
    checks.append(
        _series_check(
            "dp-open-skew",
            cf.open_total("skew", n),
            skew_table.open_series(n),
            f"closed form matches table through z^{n}",
        )
    )
    bad = None
    for j in range(min(j_top, 5) + 1):
        for series, layer in ((fj[j], LayerTag.F), (gj[j], LayerTag.G), (hj[j], LayerTag.H)):
            if series != layers.get((layer, j), nil):
                bad = (layer.value, j)
                break
        if bad:
            break
    checks.append(
        Check(
            "dp-level-family",
            bad is None,
            f"level series match table for j <= {min(j_top, 5)}"
            if bad is None
            else f"mismatch at layer {bad[0]}, level {bad[1]}",
        )
    )
    return checks


def _suite_oeis(order: int, max_n: int) -> list:
    axis = cf.f0("dyck", len(cf.A224747) - 1)
    ok_axis = cf.matches_prefix(axis, cf.A224747)
    ok_shift = cf.oeis_shift_check(len(cf.A274115_PREFIX) - 1)
    return [
        Check(
            "oeis-axis-dyck-cat",
            ok_axis,
            f"matches published sequence for n <= {len(cf.A224747) - 1}",
        ),
        Check(
            "oeis-open-shift",
            ok_shift,
            f"1 + z * open total matches shifted sequence for n <= {len(cf.A274115_PREFIX) - 1}",
        ),
    ]


_SUITES = {
    "kernel": _suite_kernel,
    "recurrences": _suite_recurrences,
    "oracle": _suite_oracle,
    "theorem": _suite_theorem,
    "oeis": _suite_oeis,
}

SUITES = ("all",) + tuple(sorted(_SUITES))


def run_suite(suite: str = "all", order: int = 100, max_n: int = 12) -> SuiteReport:
    """Run one named suite (or all of them) and collect the report.

    ``order`` bounds the series comparisons, ``max_n`` the brute-force
    enumerations.  Raises ValueError for an unknown suite name and lets the
    brute-force size guards propagate if max_n is pushed past them.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if suite == "all":
        builders = [_SUITES[k] for k in sorted(_SUITES)]
    elif suite in _SUITES:
        builders = [_SUITES[suite]]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    checks: list = []
    for b in builders:
        checks.extend(b(order, max_n))
    elapsed = int((time.perf_counter() - start) * 1000)
    return SuiteReport(suite, checks, elapsed)
