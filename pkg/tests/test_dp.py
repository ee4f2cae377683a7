import io
import math

import pytest

from catwalk import dp
from catwalk.automaton import State
from catwalk.model import (
    CatastropheRule,
    DYCK,
    DYCK_CAT,
    LayerTag,
    SKEW,
    SKEW_CAT,
    with_rule,
)

F, G, H = LayerTag.F, LayerTag.G, LayerTag.H

# expansions frozen from the closed forms (see test_closedform) and
# reproduced here as literals so this module stands on its own
AXIS_DYCK_CAT = [1, 0, 1, 1, 3, 5, 12, 23, 52, 105, 232, 480, 1049, 2199]
AXIS_SKEW_CAT = [1, 0, 1, 1, 4, 5, 17, 25, 76, 125, 353, 625, 1681]
OPEN_SKEW_CAT = [1, 1, 2, 4, 9, 18, 41, 85, 193, 410, 929, 2004]
F0_SKEW_CAT = [1, 0, 0, 1, 1, 4, 6, 18, 31, 85, 157, 410, 792, 2004]
G0_SKEW_CAT = [0, 0, 1, 0, 2, 1, 7, 6, 29]
H0_SKEW_CAT = [0, 0, 0, 0, 1, 0, 4]
AXIS_SKEW_PLAIN = [1, 0, 1, 0, 3, 0, 10, 0, 36]


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def test_dyck_closed_counts_are_catalan():
    table = dp.count_table(DYCK, 20)
    for n in range(21):
        expected = catalan(n // 2) if n % 2 == 0 else 0
        assert table.closed_count(n) == expected


def test_dyck_open_counts_are_central_binomials():
    # non-negative walks of length n with free endpoint
    table = dp.count_table(DYCK, 12)
    for n in range(13):
        assert table.open_count(n) == math.comb(n, n // 2)


def test_axis_counts_dyck_cat():
    table = dp.count_table(DYCK_CAT, 13)
    assert [table.closed_count(n) for n in range(14)] == AXIS_DYCK_CAT


def test_axis_counts_skew_cat():
    table = dp.count_table(SKEW_CAT, 12)
    assert [table.closed_count(n) for n in range(13)] == AXIS_SKEW_CAT


def test_open_counts_skew_cat():
    table = dp.count_table(SKEW_CAT, 11)
    assert [table.open_count(n) for n in range(12)] == OPEN_SKEW_CAT


def test_axis_counts_skew_plain():
    table = dp.count_table(SKEW, 8)
    assert [table.closed_count(n) for n in range(9)] == AXIS_SKEW_PLAIN


def test_layer_resolved_axis_counts():
    table = dp.count_table(SKEW_CAT, 13)
    assert table.layer_series(F, 0).as_integers() == F0_SKEW_CAT
    assert table.layer_series(G, 0, 8).as_integers() == G0_SKEW_CAT
    assert table.layer_series(H, 0, 6).as_integers() == H0_SKEW_CAT


def test_free_functions_match_table():
    table = dp.count_table(SKEW_CAT, 7)
    assert dp.count_closed(SKEW_CAT, 7) == table.closed_count(7)
    assert dp.count_open(SKEW_CAT, 7) == table.open_count(7)
    assert dp.count_level(SKEW_CAT, 7, 3) == table.level_count(7, 3)
    assert dp.layer_series(SKEW_CAT, G, 1, 6) == table.layer_series(G, 1, 6)
    with pytest.raises(ValueError):
        dp.count_level(SKEW_CAT, 5, -1)


def test_counts_partition_by_level_and_state():
    table = dp.count_table(SKEW_CAT, 9)
    n = 9
    by_level = sum(table.level_count(n, k) for k in range(n + 1))
    assert by_level == table.open_count(n)
    by_state = sum(table.final_counts(n).values())
    assert by_state == table.open_count(n)
    assert table.state_count(n, State(F, 0)) == table.final_counts(n)[State(F, 0)]


def test_series_extraction_consistency():
    table = dp.count_table(SKEW_CAT, 10)
    m = table.layer_series_map(10)
    for (layer, level), series in m.items():
        assert series == table.layer_series(layer, level, 10)
    lm = table.level_series_map(10)
    assert lm[0] == table.closed_series(10)
    total = sum(lm.values(), dp.Series.zero(10))
    assert total == table.open_series(10)


def test_table_bounds():
    table = dp.count_table(DYCK, 5)
    assert table.n_max == 5
    with pytest.raises(ValueError):
        table.closed_count(6)
    with pytest.raises(ValueError):
        table.layer_series(F, 0, 7)
    with pytest.raises(ValueError):
        dp.count_table(DYCK, -1)


def test_write_csv():
    buf = io.StringIO()
    dp.count_table(DYCK, 2).write_csv(buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "n,state,count"
    assert "2,F2,1" in lines
    assert "2,G0,1" in lines


def test_recurrences_pass_for_presets():
    for config in (DYCK, DYCK_CAT, SKEW, SKEW_CAT):
        report = dp.verify_recurrences(config, 30)
        assert report.ok
        assert report.failures() == []
    assert dp.verify_recurrences(DYCK_CAT, 10).system == "dyck"
    assert dp.verify_recurrences(SKEW, 10).system == "skew"


def test_recurrences_pass_for_even_rule():
    even = with_rule(SKEW_CAT, CatastropheRule.even_min(2))
    assert dp.verify_recurrences(even, 25).ok
    even_d = with_rule(DYCK_CAT, CatastropheRule.even_min(2))
    assert dp.verify_recurrences(even_d, 25).ok


def test_recurrences_negative_controls():
    # the layered system encodes the red-model adjacency rules, which a
    # plain table does not satisfy, and vice versa
    with pytest.raises(dp.RecurrenceViolation):
        dp.verify_recurrences(DYCK_CAT, 15, system="skew")
    with pytest.raises(dp.RecurrenceViolation):
        dp.verify_recurrences(SKEW_CAT, 15, system="dyck")
    report = dp.verify_recurrences(SKEW_CAT, 15, system="dyck", strict=False)
    assert not report.ok
    assert any("fails at" in c.detail for c in report.failures())


def test_recurrences_bad_arguments():
    with pytest.raises(ValueError):
        dp.verify_recurrences(DYCK, 0)
    with pytest.raises(ValueError):
        dp.verify_recurrences(DYCK, 10, system="motzkin")
