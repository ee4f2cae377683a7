import pytest

from catwalk.model import DYCK_CAT, SKEW, SKEW_CAT, parse_steps, validate_path
from catwalk.render import path_vertices, to_ascii, to_svg


def path(config, text):
    return validate_path(config, parse_steps(text))


def test_red_vertices():
    p = path(DYCK_CAT, "UUCUD")
    assert path_vertices(p, "red") == [(0, 0), (1, 1), (2, 2), (3, 0), (4, 1), (5, 0)]


def test_sw_vertices():
    p = path(SKEW, "UUUDDR")
    assert path_vertices(p, "sw") == [
        (0, 0),
        (1, 1),
        (2, 2),
        (3, 3),
        (4, 2),
        (5, 1),
        (4, 0),
    ]


def test_sw_rejects_catastrophes():
    p = path(SKEW_CAT, "UUC")
    with pytest.raises(ValueError):
        path_vertices(p, "sw")


def test_unknown_geometry():
    with pytest.raises(ValueError):
        path_vertices(path(SKEW, "UD"), "polar")


def test_ascii_frozen():
    art = to_ascii(path(DYCK_CAT, "UUCUD"))
    assert art == " /|\n/ |/\\\n-----"


def test_ascii_red_step_glyph():
    art = to_ascii(path(SKEW, "UUDR"))
    assert art == " /\\\n/  r\n----"


def test_ascii_empty_path():
    assert to_ascii(path(SKEW, "")) == ""


def test_svg_structure():
    p = path(SKEW_CAT, "UUUUDRC")
    markup = to_svg(p, "red")
    assert markup.startswith("<svg")
    assert markup.count("<line") == len(p) + 1  # one per step plus the axis
    assert markup.count("<circle") == len(p) + 1
    assert "#c0392b" in markup  # red step colour
    assert "stroke-dasharray" in markup  # catastrophe
    assert markup.rstrip().endswith("</svg>")


def test_svg_sw_geometry():
    markup = to_svg(path(SKEW, "UUUDDR"), "sw")
    assert "<svg" in markup and "#c0392b" in markup


def test_svg_empty_path():
    markup = to_svg(path(SKEW, ""), "red")
    assert markup.startswith("<svg")
