import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fanramsey.coloring import (BLUE, RED, Coloring, EdgeColor, assign_color, color_neighborhood,
                                common_color_neighborhood, full_set, induced_subcoloring,
                                members, new_complete, size, vset)
from fanramsey.constructions import pentagon, star_fan_extremal
from fanramsey.errors import EmptySet, OutOfRange, SelfLoop


@st.composite
def colorings(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return Coloring.random(n, random.Random(seed))


def test_complement():
    assert RED.complement() is BLUE
    assert BLUE.complement() is RED
    assert len(EdgeColor) == 2


def test_new_complete_red_triangle():
    c = new_complete(3, RED)
    assert all(c.degree(v, RED) == 2 for v in range(3))


def test_new_complete_single_vertex():
    c = new_complete(1, BLUE)
    assert c.edges(RED) == [] and c.edges(BLUE) == []


def test_new_complete_14_blue():
    assert new_complete(14, BLUE).edge_count(BLUE) == 91


@pytest.mark.parametrize("n", [0, 65, -3])
def test_new_complete_out_of_range(n):
    with pytest.raises(OutOfRange):
        new_complete(n, RED)


def test_assign_recolors_one_edge():
    c = assign_color(new_complete(3, RED), 0, 2, BLUE)
    assert c.degree(0, BLUE) == 1 and c.degree(2, BLUE) == 1
    assert c.degree(1, BLUE) == 0


def test_assign_read_after_write_and_symmetry():
    c = assign_color(new_complete(5, BLUE), 1, 3, RED)
    assert c.color(1, 3) is RED
    assert c.color(3, 1) is RED


def test_assign_errors():
    c = new_complete(4)
    with pytest.raises(SelfLoop):
        assign_color(c, 2, 2, RED)
    with pytest.raises(OutOfRange):
        assign_color(c, 0, 4, RED)


def test_star_fan_extremal_neighborhood_sizes():
    c = star_fan_extremal(3)
    for v in range(c.n):
        assert size(color_neighborhood(c, v, RED)) == 2
        assert size(color_neighborhood(c, v, BLUE)) == 5


def test_all_blue_has_no_red_neighbors():
    c = new_complete(5, BLUE)
    assert all(color_neighborhood(c, v, RED) == 0 for v in range(5))


def test_neighborhood_out_of_range():
    with pytest.raises(OutOfRange):
        color_neighborhood(new_complete(3), 3, RED)


def test_common_neighborhood_all_blue():
    c = new_complete(6, BLUE)
    assert common_color_neighborhood(c, vset([0, 2, 3, 5]), BLUE) == vset([1, 4])


def test_common_neighborhood_pentagon_edge():
    assert common_color_neighborhood(pentagon(), vset([0, 1]), RED) == 0


def test_common_neighborhood_empty_set():
    with pytest.raises(EmptySet):
        common_color_neighborhood(new_complete(3), 0, RED)


def test_common_neighborhood_matches_loops(rng):
    for _ in range(200):
        c = Coloring.random(8, rng)
        s = rng.randrange(1, 256)
        col = rng.choice([RED, BLUE])
        expected = {u for u in range(8)
                    if all(u != v and c.color(u, v) is col for v in members(s))}
        assert set(members(common_color_neighborhood(c, s, col))) == expected


def test_induce_everything_is_identity(rng):
    c = Coloring.random(9, rng)
    assert induced_subcoloring(c, full_set(9)) == c


def test_induce_two_vertices():
    c = assign_color(new_complete(5, BLUE), 1, 4, RED)
    sub = induced_subcoloring(c, vset([1, 4]))
    assert sub.n == 2 and sub.color(0, 1) is RED


def test_induce_red_block_of_extremal():
    sub = induced_subcoloring(star_fan_extremal(3), vset(range(3)))
    assert sub == new_complete(3, RED)


def test_induce_empty():
    with pytest.raises(EmptySet):
        induced_subcoloring(new_complete(3), 0)


@given(colorings())
def test_degree_identity(c):
    for v in range(c.n):
        assert c.degree(v, RED) + c.degree(v, BLUE) == c.n - 1


@given(colorings(min_n=2), st.data())
def test_assign_then_complement_touches_one_edge(c, data):
    u, v = data.draw(st.lists(st.integers(0, c.n - 1), min_size=2, max_size=2, unique=True))
    col = data.draw(st.sampled_from([RED, BLUE]))
    once = assign_color(c, u, v, col)
    twice = assign_color(once, u, v, col.complement())
    assert twice.color(u, v) is col.complement()
    changed = {(a, b) for b in range(c.n) for a in range(b)
               if once.color(a, b) is not twice.color(a, b)}
    assert changed == {(min(u, v), max(u, v))}


@given(colorings(min_n=3), st.data())
def test_induce_commutes_with_assign(c, data):
    s = data.draw(st.integers(1, full_set(c.n)).filter(lambda m: size(m) >= 2))
    u, v = data.draw(st.lists(st.sampled_from(list(members(s))), min_size=2, max_size=2,
                              unique=True))
    col = data.draw(st.sampled_from([RED, BLUE]))
    index = {w: i for i, w in enumerate(members(s))}
    left = induced_subcoloring(assign_color(c, u, v, col), s)
    right = assign_color(induced_subcoloring(c, s), index[u], index[v], col)
    assert left == right


@given(colorings(), st.data())
def test_common_neighborhood_is_inside_each(c, data):
    s = data.draw(st.integers(1, full_set(c.n)))
    col = data.draw(st.sampled_from([RED, BLUE]))
    common = common_color_neighborhood(c, s, col)
    assert common & s == 0
    for v in members(s):
        assert common & ~color_neighborhood(c, v, col) == 0


def test_invalid_rows_rejected():
    with pytest.raises(ValueError):
        Coloring(2, (0b10, 0))
    with pytest.raises(SelfLoop):
        Coloring(2, (0b01, 0))
