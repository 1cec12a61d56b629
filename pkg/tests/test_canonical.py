import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from fanramsey.coloring import BLUE, RED, Coloring, assign_color, new_complete
from fanramsey.search.canonical import (canonical_coloring, canonical_form, canonical_form_exact,
                                        swap_invariant_key)

from .conftest import all_colorings


def isomorphic(c, d):
    return any(c.relabel(p) == d for p in itertools.permutations(range(c.n)))


def brute_class_count(n):
    reps = []
    for c in all_colorings(n):
        if not any(isomorphic(c, r) for r in reps):
            reps.append(c)
    return len(reps)


def test_all_red_is_invariant():
    c = new_complete(4, RED)
    for p in itertools.permutations(range(4)):
        assert canonical_form(c.relabel(p)) == canonical_form(c)


@st.composite
def coloring_and_perm(draw):
    n = draw(st.integers(1, 14))
    c = Coloring.random(n, random.Random(draw(st.integers(0, 2**32))))
    return c, draw(st.permutations(range(n)))


@given(coloring_and_perm())
def test_relabeling_preserves_form(cp):
    c, perm = cp
    assert canonical_form(c.relabel(perm)) == canonical_form(c)
    assert canonical_coloring(c.relabel(perm)) == canonical_coloring(c)


@given(coloring_and_perm(), st.data())
def test_one_edge_flip_changes_form(cp, data):
    c, _ = cp
    if c.n < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, c.n - 1), min_size=2, max_size=2, unique=True))
    d = assign_color(c, u, v, c.color(u, v).complement())
    assert canonical_form(c) != canonical_form(d)


def test_canonical_coloring_is_isomorphic(rng):
    for _ in range(30):
        c = Coloring.random(6, rng)
        assert isomorphic(c, canonical_coloring(c))


def test_k4_class_count_matches_pairwise_isomorphism():
    forms = {canonical_form(c) for c in all_colorings(4)}
    exact = {canonical_form_exact(c) for c in all_colorings(4)}
    assert len(forms) == len(exact) == brute_class_count(4) == 11


def test_exact_and_nauty_forms_induce_same_partition():
    buckets = {}
    for c in all_colorings(5):
        buckets.setdefault(canonical_form(c), set()).add(canonical_form_exact(c))
    assert all(len(v) == 1 for v in buckets.values())
    assert len(buckets) == 34


def test_swap_is_not_quotiented():
    c = Coloring.from_red_edges(4, [(0, 1)])
    assert canonical_form(c) != canonical_form(c.swap_colors())
    assert swap_invariant_key(4, c.red)[0] == swap_invariant_key(4, c.swap_colors().red)[0]


def test_single_vertex():
    assert canonical_form(new_complete(1, BLUE)) == canonical_form(new_complete(1, RED))


def test_exact_and_nauty_forms_agree_up_to_eight(rng):
    for n in (6, 7, 8):
        cs = [Coloring.random(n, rng) for _ in range(6)]
        # near-duplicates: same coloring relabeled, and one edge flipped
        cs += [c.relabel(rng.sample(range(n), n)) for c in cs[:3]]
        cs += [assign_color(c, 0, 1, c.color(0, 1).complement()) for c in cs[:3]]
        for a in cs:
            for b in cs:
                same_exact = canonical_form_exact(a) == canonical_form_exact(b)
                assert same_exact == (canonical_form(a) == canonical_form(b))
