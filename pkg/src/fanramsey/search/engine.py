"""Level-by-level isomorph-free extension search.

Level ``k`` holds one canonical representative per isomorphism class of
colorings of ``K_k`` that avoid every forbidden pattern and pass every prune.
Level ``k + 1`` is obtained by attaching a new vertex to each representative
in every admissible way and deduplicating by canonical form.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..coloring import BLUE, RED, Coloring, EdgeColor
from ..detectors import contains_mono_or_none
from ..errors import BudgetExceeded
from ..patterns import Join, Pattern
from .canonical import canonical_key, swap_invariant_key, swap_rows
from .incremental import completed_by_isolated_vertex, degree_cap_checker, make_checker
from .rules import DegreeCap, ForbidRule, PruneRule, SearchResult, SearchSpec

log = logging.getLogger(__name__)

Rows = tuple[int, ...]


@dataclass(frozen=True)
class Unresolved:
    """No empty level up to ``max_n``; ``deepest_level`` still had survivors."""

    deepest_level: int
    exhausted: bool

    def __bool__(self) -> bool:
        return False


def derive_star_degree_cap(forbids: Iterable[ForbidRule]) -> list[DegreeCap]:
    """Degree caps implied by forbidden stars.

    A vertex of ``col``-degree ``n`` is the centre of a ``col`` star(n), so
    forbidding that star is the same as capping the degree at ``n - 1``.
    """
    caps: dict[EdgeColor, int] = {}
    for rule in forbids:
        p = rule.pattern
        if isinstance(p, Join) and p.a == 1 and p.b == 0 and p.c >= 1:
            caps[rule.color] = min(p.c - 1, caps.get(rule.color, p.c - 1))
    return [DegreeCap(col, cap) for col, cap in caps.items()]


# -- single-survivor extension ----------------------------------------------

def _checkers(spec: SearchSpec, adj: Sequence[int], k: int, col: EdgeColor):
    """Checks for one color, or ``None`` if no extension can avoid ``col`` patterns."""
    pats = [p for c, p in spec.active_patterns() if c is col]
    if any(completed_by_isolated_vertex(p, adj, k) for p in pats):
        return None
    checks = [make_checker(p, adj, k) for p in pats]
    cap = spec.degree_caps().get(col)
    if cap is not None:
        # cheapest test first
        checks.insert(0, degree_cap_checker(cap, adj, k))
    return checks


def extensions(rows: Rows, spec: SearchSpec) -> list[int]:
    """Red neighborhoods of a new vertex that keep ``rows`` clean.

    Edges to old vertices are decided in vertex order, blue before red, and a
    branch is abandoned as soon as one color class gains a forbidden copy.
    """
    k = len(rows)
    red_checks = _checkers(spec, rows, k, RED)
    blue_checks = _checkers(spec, swap_rows(k, rows), k, BLUE)
    out: list[int] = []
    if red_checks is None or blue_checks is None:
        return out

    def grow(i: int, rmask: int, bmask: int) -> None:
        if i == k:
            out.append(rmask)
            return
        if all(ch(bmask, i) for ch in blue_checks):
            grow(i + 1, rmask, bmask | 1 << i)
        if all(ch(rmask, i) for ch in red_checks):
            grow(i + 1, rmask | 1 << i, bmask)

    grow(0, 0, 0)
    return out


def _attach(rows: Rows, red_nbhd: int) -> Rows:
    k = len(rows)
    bit = 1 << k
    return tuple(r | bit if red_nbhd >> i & 1 else r for i, r in enumerate(rows)) + (red_nbhd,)


def _expand_chunk(args) -> dict[bytes, Rows]:
    chunk, spec = args
    keyfn = swap_invariant_key if spec.swap_symmetric else canonical_key
    found: dict[bytes, Rows] = {}
    for rows in chunk:
        for red in extensions(rows, spec):
            new = _attach(rows, red)
            form, canon = keyfn(len(new), new)
            found.setdefault(form, canon)
    return found


def _passes_at_level_one(spec: SearchSpec) -> bool:
    c = Coloring(1, (0,))
    return all(contains_mono_or_none(c, col, p) is None for col, p in spec.active_patterns())


def extend_level(survivors: Sequence[Rows], spec: SearchSpec, deadline: Optional[float] = None,
                 n_jobs: int = 1) -> list[Rows]:
    """Canonical survivors on ``k + 1`` vertices from those on ``k``.

    Output is sorted by canonical form.  Raises :class:`BudgetExceeded` once
    ``deadline`` (a ``time.monotonic`` value) passes; ``partial`` then holds
    the classes found so far.
    """
    found: dict[bytes, Rows] = {}
    if n_jobs > 1 and len(survivors) > 4 * n_jobs:
        step = -(-len(survivors) // (8 * n_jobs))
        chunks = [(survivors[i:i + step], spec) for i in range(0, len(survivors), step)]
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            for part in pool.map(_expand_chunk, chunks):
                for form, canon in part.items():
                    found.setdefault(form, canon)
                if deadline is not None and time.monotonic() > deadline:
                    pool.shutdown(cancel_futures=True)
                    raise BudgetExceeded("time budget exhausted", partial=found)
    else:
        for idx in range(0, len(survivors), 64):
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time budget exhausted", partial=found)
            for form, canon in _expand_chunk((survivors[idx:idx + 64], spec)).items():
                found.setdefault(form, canon)
    return [found[f] for f in sorted(found)]


def exhaustive_search(spec: SearchSpec, n_jobs: int = 1,
                      keep_levels: bool = False) -> SearchResult:
    """Run levels ``1..spec.target_n``; stops early once a level is empty.

    A budget overrun returns the partial result with ``exhausted=False``
    rather than raising.  With ``keep_levels`` the full survivor lists are
    attached as ``result.levels``.
    """
    start = time.monotonic()
    deadline = start + spec.time_budget if spec.time_budget > 0 else None
    result = SearchResult(spec)
    level: list[Rows] = [(0,)] if _passes_at_level_one(spec) else []
    levels = {1: level}
    result.counts.append(len(level))
    result.level_seconds.append(time.monotonic() - start)
    if level:
        result.samples[1] = Coloring(1, level[0])
    k = 1
    while k < spec.target_n and level:
        t0 = time.monotonic()
        try:
            level = extend_level(level, spec, deadline, n_jobs)
        except BudgetExceeded:
            result.budget_exceeded = True
            result.elapsed = time.monotonic() - start
            log.info("budget exhausted while building level %d", k + 1)
            return result
        k += 1
        result.counts.append(len(level))
        result.level_seconds.append(time.monotonic() - t0)
        if level:
            result.samples[k] = Coloring(k, level[0])
        if keep_levels:
            levels[k] = level
        log.info("level %d: %d classes (%.1fs)", k, len(level), result.level_seconds[-1])
    # once a level is empty every later level is empty too
    while k < spec.target_n:
        k += 1
        result.counts.append(0)
        result.level_seconds.append(0.0)
    result.exhausted = True
    result.elapsed = time.monotonic() - start
    if keep_levels:
        result.levels = levels
    return result


def compute_ramsey_value(red_p: Pattern, blue_p: Pattern, max_n: int,
                         prunes: Sequence[PruneRule] = (), time_budget: float = 0.0,
                         n_jobs: int = 1):
    """Least ``N <= max_n`` with no clean coloring of ``K_N``, or :class:`Unresolved`."""
    spec = SearchSpec(max_n, (ForbidRule(RED, red_p), ForbidRule(BLUE, blue_p)),
                      tuple(prunes), time_budget)
    res = exhaustive_search(spec, n_jobs=n_jobs)
    first = res.first_empty_level
    if first is not None:
        return first
    deepest = max((k for k, n in enumerate(res.counts) if n), default=0)
    return Unresolved(deepest, res.exhausted)
