import pytest

from catwalk import brute
from catwalk.brute import (
    GEO_LIMIT,
    GeoPath,
    RED_LIMIT,
    SizeGuard,
    enumerate_geometric,
    enumerate_red,
    models_agree,
    red_to_geometric,
)
from catwalk.model import (
    DYCK,
    DYCK_CAT,
    SKEW,
    SKEW_CAT,
    parse_steps,
    validate_path,
)

# the complete census of closed red-model paths of length 6, in the
# lexicographic order (U < D < R) the enumerator promises
CLOSED_SKEW_6 = [
    "UUUDDD",
    "UUUDDR",
    "UUUDRD",
    "UUUDRR",
    "UUDUDD",
    "UUDUDR",
    "UUDDUD",
    "UDUUDD",
    "UDUUDR",
    "UDUDUD",
]


def test_closed_skew_length_6_census():
    paths = enumerate_red(SKEW, 6, "closed")
    assert [str(p) for p in paths] == CLOSED_SKEW_6


def test_geometric_length_6_census():
    paths = enumerate_geometric(6, "closed")
    assert len(paths) == 10
    assert all(p.vertices[0] == (0, 0) for p in paths)
    assert all(p.final_height == 0 for p in paths)


def test_lex_order_includes_catastrophes_last():
    rank = {"U": 0, "D": 1, "R": 2, "C": 3}
    names = [str(p) for p in enumerate_red(DYCK_CAT, 3)]
    keys = [[rank[ch] for ch in name] for name in names]
    assert keys == sorted(keys)
    assert names.index("UUD") < names.index("UUC")


def test_empty_and_tiny_lengths():
    only = enumerate_red(DYCK, 0)
    assert len(only) == 1 and len(only[0]) == 0
    assert [str(p) for p in enumerate_red(SKEW, 2)] == ["UU", "UD"]
    assert len(enumerate_geometric(2)) == 2


def test_final_filters_partition():
    n = 7
    everything = enumerate_red(SKEW_CAT, n)
    by_level = sum(len(enumerate_red(SKEW_CAT, n, k)) for k in range(n + 1))
    assert by_level == len(everything)
    closed = enumerate_red(SKEW_CAT, n, "closed")
    assert all(p.is_closed for p in closed)
    assert {str(p) for p in closed} <= {str(p) for p in everything}


def test_red_counts_match_frozen_axis_series():
    # closed counts of the plain red model: nonzero only at even lengths
    expected = [1, 0, 1, 0, 3, 0, 10, 0, 36]
    got = [len(enumerate_red(SKEW, n, "closed")) for n in range(9)]
    assert got == expected


def test_validation_agrees_with_enumeration():
    for p in enumerate_red(SKEW_CAT, 5):
        again = validate_path(SKEW_CAT, p.steps)
        assert again.levels == p.levels


def test_size_guards():
    with pytest.raises(SizeGuard):
        enumerate_red(SKEW, RED_LIMIT + 1)
    with pytest.raises(SizeGuard):
        enumerate_geometric(GEO_LIMIT + 1)
    with pytest.raises(ValueError):
        enumerate_red(SKEW, -1)


def test_geometric_blocks_immediate_backtrack():
    # NE followed by SW would retrace the same segment; the enumerator
    # must never produce it
    for p in enumerate_geometric(2):
        assert p.steps != (brute.NE, brute.SW)


def test_geometric_allows_vertex_sharing_spike():
    # NE NE SE SW: the SE and SW steps share their meeting vertex but no
    # ground, so the path is legal
    spike = GeoPath(((0, 0), (1, 1), (2, 2), (3, 1), (2, 0)))
    assert spike in enumerate_geometric(4, "closed")


def test_red_to_geometric():
    p = validate_path(SKEW, parse_steps("UUDR"))
    g = red_to_geometric(p)
    assert g.vertices == ((0, 0), (1, 1), (2, 2), (3, 1), (2, 0))
    assert g.final_height == p.final_level
    with pytest.raises(ValueError):
        red_to_geometric(validate_path(SKEW_CAT, parse_steps("UUC")))


def test_geo_path_steps_property():
    g = GeoPath(((0, 0), (1, 1), (2, 0)))
    assert g.steps == (brute.NE, brute.SE)
    assert len(g) == 2


def test_models_agree_small():
    for n in range(11):
        assert models_agree(n)
