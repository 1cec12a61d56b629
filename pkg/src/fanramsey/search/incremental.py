"""Exact incremental pattern checks for one-vertex extensions.

A survivor on vertices ``0..k-1`` is clean, and a new vertex ``v = k`` is
being attached.  For one color, the new vertex's neighborhood is grown one
vertex at a time.  A checker ``allows(mask, x)`` answers whether adding ``x``
to the current neighborhood ``mask`` keeps the color class free of the
pattern, assuming ``mask`` alone was fine.  Containment is monotone in the
neighborhood, so a refusal prunes every completion of ``mask | x``.
"""
from __future__ import annotations

from typing import Callable, Sequence

from ..coloring import members, size
from ..detectors import find_matching, find_triangle_packing, iter_cliques
from ..patterns import Join, Pattern, Triangles

Check = Callable[[int, int], bool]


def make_checker(p: Pattern, adj: Sequence[int], k: int) -> Check:
    """Checker for one color class ``adj`` (on ``k`` old vertices) and pattern ``p``."""
    if isinstance(p, Join):
        if p.a == 1 and p.c == 0 and p.b >= 1:
            return _fan_checker(p.b, adj, k)
        if p.a == 0 and p.c == 0:
            return _matching_checker(p.b, adj, k)
        if p.a >= 1 and p.b == 0:
            return _clique_join_checker(p.a, p.c, adj, k)
    return _generic_checker(p, adj, k)


def completed_by_isolated_vertex(p: Pattern, adj: Sequence[int], k: int) -> bool:
    """Whether attaching a vertex with no edges of this color creates ``p``.

    Only joins without a clique part have a slot with no required edges; for
    every other pattern the empty neighborhood is always safe.
    """
    if not isinstance(p, Join) or p.a or not p.c:
        return False
    return k + 1 >= p.vertex_count and find_matching(adj, (1 << k) - 1, p.b) is not None


def degree_cap_checker(cap: int, adj: Sequence[int], k: int) -> Check:
    """New vertex and each of its neighbors stay at degree ``<= cap``."""
    full = [size(r) >= cap for r in adj]

    def allows(mask: int, x: int) -> bool:
        return size(mask) < cap and not full[x]

    return allows


class _MatchCache:
    """Memoized ``has_matching`` on one fixed adjacency."""

    def __init__(self, adj):
        self.adj = adj
        self.seen: dict[tuple[int, int], bool] = {}
        self.failed: set = set()

    def __call__(self, s: int, goal: int) -> bool:
        key = (s, goal)
        hit = self.seen.get(key)
        if hit is None:
            hit = find_matching(self.adj, s, goal, self.failed) is not None
            self.seen[key] = hit
        return hit


def _fan_checker(b: int, adj: Sequence[int], k: int) -> Check:
    has = _MatchCache(adj)
    # conf[x]: vertices that may not share the new vertex's neighborhood with x,
    # because together they complete a fan centred at an old vertex.
    conf = [0] * k
    for u in range(k):
        nu = adj[u]
        if size(nu) < 2 * b - 1:
            continue
        for w in members(nu):
            if has(nu & ~(1 << w), b - 1):
                conf[u] |= 1 << w
                conf[w] |= 1 << u

    def allows(mask: int, x: int) -> bool:
        if mask & conf[x]:
            return False
        if size(mask) + 1 < 2 * b:
            return True
        # a fan centred at the new vertex must match x inside mask
        for y in members(mask & adj[x]):
            if has(mask & ~(1 << y), b - 1):
                return False
        return True

    return allows


def _matching_checker(b: int, adj: Sequence[int], k: int) -> Check:
    has = _MatchCache(adj)
    everyone = (1 << k) - 1
    bad = 0
    for w in range(k):
        if has(everyone & ~(1 << w), b - 1):
            bad |= 1 << w

    def allows(mask: int, x: int) -> bool:
        return not bad >> x & 1

    return allows


def _clique_join_checker(a: int, c: int, adj: Sequence[int], k: int) -> Check:
    """Patterns ``K_a + c*K1``: clique, star, book and the K4+2K1 gadget."""

    def allows(mask: int, x: int) -> bool:
        nbhd = mask | 1 << x
        ax = adj[x] & mask
        # the new vertex and x both in the clique part
        if a >= 2:
            for _, common in iter_cliques(adj, ax, a - 2):
                if size(nbhd & adj[x] & common) >= c:
                    return False
        # exactly one of them in the clique part
        for _, common in iter_cliques(adj, ax, a - 1):
            if size(nbhd & common) >= c:          # new vertex in the clique, x outside
                return False
            if size(adj[x] & common) + 1 >= c:    # x in the clique, new vertex outside
                return False
        return True

    return allows


def _generic_checker(p: Pattern, adj: Sequence[int], k: int) -> Check:
    v = k
    full_new = (1 << (k + 1)) - 1

    def extended(nbhd: int) -> list[int]:
        rows = [r | (1 << v) if nbhd >> i & 1 else r for i, r in enumerate(adj)]
        rows.append(nbhd)
        return rows

    if isinstance(p, Triangles):
        def allows(mask: int, x: int) -> bool:
            rows = extended(mask | 1 << x)
            return find_triangle_packing(rows, full_new, p.t) is None
        return allows

    need = 2 * p.b + p.c

    def allows(mask: int, x: int) -> bool:
        nbhd = mask | 1 << x
        rows = extended(nbhd)
        if p.a >= 1:
            # new vertex inside the clique part
            for _, common in iter_cliques(rows, nbhd, p.a - 1):
                s = common & nbhd
                if size(s) >= need and find_matching(rows, s, p.b) is not None:
                    return False
        # new vertex outside the clique part (or no clique part at all)
        for _, common in iter_cliques(rows, nbhd, p.a):
            s = common & full_new
            if size(s) >= need and find_matching(rows, s, p.b) is not None:
                return False
        return True

    return allows
