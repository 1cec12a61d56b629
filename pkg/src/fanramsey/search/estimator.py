"""Estimator-style wrapper around the extension search.

``fit`` runs the search; results land in trailing-underscore attributes.
``predict`` classifies colorings as admissible (avoiding every forbidden
pattern) or not.  Parameters follow the usual ``get_params``/``set_params``
convention so the object can be cloned and configured generically.
"""
from __future__ import annotations

import inspect

from ..coloring import BLUE, RED
from ..detectors import contains_mono_or_none
from ..validation import check_colorings, check_pattern
from .engine import derive_star_degree_cap, exhaustive_search
from .rules import ForbidRule, SearchSpec


class NotFittedError(AttributeError):
    pass


class RamseySearch:
    """Exhaustive search for colorings with no red ``red_pattern`` and no blue ``blue_pattern``.

    Parameters
    ----------
    red_pattern, blue_pattern : Pattern or str
        Forbidden patterns, e.g. ``"fan:3"``.
    max_n : int
        Largest complete graph to enumerate.
    prunes : sequence of DegreeCap / GadgetAtTarget
        Extra pruning rules; their soundness is the caller's responsibility.
    star_caps : bool
        Add the degree caps implied by forbidden stars (always sound).
    swap_symmetric : bool
        Identify colorings with their color swap (symmetric problems only).
    time_budget : float
        Seconds; 0 means unlimited.
    n_jobs : int
        Worker processes for level expansion.

    Attributes
    ----------
    counts_ : list of int
        ``counts_[k]`` canonical classes on ``k`` vertices.
    ramsey_value_ : int or None
        First empty level, ``None`` if every level up to ``max_n`` survived.
    exhausted_ : bool
    result_ : SearchResult
    """

    def __init__(self, red_pattern="fan:2", blue_pattern="fan:2", max_n=10, prunes=(),
                 star_caps=False, swap_symmetric=False, time_budget=0.0, n_jobs=1):
        self.red_pattern = red_pattern
        self.blue_pattern = blue_pattern
        self.max_n = max_n
        self.prunes = prunes
        self.star_caps = star_caps
        self.swap_symmetric = swap_symmetric
        self.time_budget = time_budget
        self.n_jobs = n_jobs

    @classmethod
    def _param_names(cls):
        sig = inspect.signature(cls.__init__)
        return sorted(p for p in sig.parameters if p != "self")

    def get_params(self, deep=True):
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = self._param_names()
        for key, value in params.items():
            if key not in valid:
                raise ValueError(f"invalid parameter {key!r} for {type(self).__name__}")
            setattr(self, key, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"

    def _forbids(self):
        return (ForbidRule(RED, check_pattern(self.red_pattern)),
                ForbidRule(BLUE, check_pattern(self.blue_pattern)))

    def build_spec(self) -> SearchSpec:
        forbids = self._forbids()
        prunes = list(self.prunes)
        if self.star_caps:
            prunes += derive_star_degree_cap(forbids)
        return SearchSpec(self.max_n, forbids, tuple(prunes), self.time_budget,
                          self.swap_symmetric)

    def fit(self, X=None, y=None):
        """Run the search.  ``X`` and ``y`` are ignored."""
        self.result_ = exhaustive_search(self.build_spec(), n_jobs=self.n_jobs)
        self.counts_ = list(self.result_.counts)
        self.exhausted_ = self.result_.exhausted
        self.ramsey_value_ = self.result_.first_empty_level
        return self

    def predict(self, X):
        """``True`` for each coloring that avoids both forbidden patterns."""
        return [
            all(contains_mono_or_none(c, r.color, r.pattern) is None for r in self._forbids())
            for c in check_colorings(X)
        ]

    def score(self, X=None, y=None):
        """Deepest level with survivors, a rough measure of search progress."""
        if not hasattr(self, "counts_"):
            raise NotFittedError("call fit() first")
        return max((k for k, n in enumerate(self.counts_) if n), default=0)
