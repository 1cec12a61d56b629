import pytest

from fanramsey.coloring import RED, Coloring, new_complete
from fanramsey.constructions import star_fan_extremal
from fanramsey.errors import BadParams
from fanramsey.patterns import fan, star
from fanramsey.search import DegreeCap
from fanramsey.search.estimator import NotFittedError, RamseySearch


def test_fit_sets_attributes():
    est = RamseySearch("star:3", "fan:3", max_n=10).fit()
    assert est.ramsey_value_ == 9
    assert est.exhausted_
    assert est.counts_[9] == 0 and est.counts_[8] > 0
    assert est.score() == 8


def test_pattern_objects_accepted():
    assert RamseySearch(star(2), fan(2), max_n=6).fit().ramsey_value_ == 5


def test_star_caps_only_add_prunes():
    plain = RamseySearch("star:3", "fan:3", max_n=10).fit()
    capped = RamseySearch("star:3", "fan:3", max_n=10, star_caps=True).fit()
    assert plain.counts_ == capped.counts_
    assert capped.build_spec().prunes == (DegreeCap(RED, 2),)


def test_unresolved_value_is_none():
    est = RamseySearch("fan:2", "fan:2", max_n=7).fit()
    assert est.ramsey_value_ is None and est.exhausted_


def test_predict():
    est = RamseySearch("star:3", "fan:3")
    assert est.predict([star_fan_extremal(3), new_complete(9)]) == [True, False]


def test_predict_accepts_matrix():
    est = RamseySearch("clique:3", "clique:3")
    c5 = [[0, 1, 0, 0, 1], [1, 0, 1, 0, 0], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1], [1, 0, 0, 1, 0]]
    assert est.predict([c5]) == [True]


def test_score_requires_fit():
    with pytest.raises(NotFittedError):
        RamseySearch().score()


def test_params_roundtrip():
    est = RamseySearch(max_n=7)
    params = est.get_params()
    assert params["max_n"] == 7 and "red_pattern" in params
    clone = RamseySearch(**params)
    assert clone.get_params() == params
    assert est.set_params(max_n=8) is est and est.max_n == 8
    with pytest.raises(ValueError):
        est.set_params(depth=3)
    assert repr(est).startswith("RamseySearch(")


def test_bad_pattern():
    with pytest.raises(BadParams):
        RamseySearch("fan:x").build_spec()


def test_swap_symmetric_spec():
    est = RamseySearch("fan:2", "fan:2", max_n=9, swap_symmetric=True).fit()
    assert est.ramsey_value_ == 9


def test_random_coloring_prediction_is_consistent():
    import random
    est = RamseySearch("fan:2", "fan:2")
    rng = random.Random(0)
    cs = [Coloring.random(8, rng) for _ in range(20)]
    assert est.predict(cs) == [est.predict([c])[0] for c in cs]
