import pytest

from fanramsey.errors import BadParams
from fanramsey.patterns import (Join, Triangles, book, fan, format_pattern, make_pattern,
                                parse_pattern, pattern_vertex_count, star, triangles)


def test_fan_encoding():
    p = make_pattern("fan", 3)
    assert p == Join(1, 3, 0)
    assert pattern_vertex_count(p) == 7


def test_star_encoding():
    assert make_pattern("star", 4) == Join(1, 0, 4)
    assert pattern_vertex_count(star(4)) == 5


def test_gadget_has_six_vertices():
    assert pattern_vertex_count(make_pattern("join", 4, 0, 2)) == 6


@pytest.mark.parametrize("p, n", [(triangles(3), 9), (book(2), 4), (fan(1), 3)])
def test_vertex_counts(p, n):
    assert pattern_vertex_count(p) == n


def test_fan_one_is_a_triangle():
    assert sorted(fan(1).edges()) == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("kind, params", [
    ("fan", (0,)), ("star", (-1,)), ("join", (1, 2)), ("fan", (1, 2)),
    ("triangles", (0,)), ("join", (0, 0, 0)), ("wheel", (3,)), ("fan", (True,)),
])
def test_bad_params(kind, params):
    with pytest.raises(BadParams):
        make_pattern(kind, *params)


@pytest.mark.parametrize("text", [
    "star:3", "fan:2", "book:4", "clique:5", "matching:3", "triangles:2", "join:4,0,2",
])
def test_parse_format_roundtrip(text):
    assert format_pattern(parse_pattern(text)) == text


@pytest.mark.parametrize("text", ["Fan:3", "fan: 3", "fan:3 ", "fan", "fan:", "join:1,,2",
                                  "fan:x", "join:1,2"])
def test_parse_rejects(text):
    with pytest.raises(BadParams):
        parse_pattern(text)


def test_join_general_formats_as_join():
    assert format_pattern(Join(1, 1, 1)) == "join:1,1,1"
    assert parse_pattern("join:1,3,0") == fan(3)


def test_triangles_edges():
    assert len(Triangles(2).edges()) == 6
