"""Monochromatic pattern detection with re-checkable witnesses.

The low-level helpers work on a tuple of neighborhood bitmasks (one color
class) so the search engine can reuse them without building ``Coloring``
objects.  The public functions wrap them for a ``Coloring`` and a color.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .coloring import Coloring, EdgeColor, full_set, members, size, vset
from .errors import PatternTooLarge
from .patterns import Join, Pattern, Triangles

Adjacency = Sequence[int]


@dataclass(frozen=True)
class Witness:
    """An occurrence of ``pattern`` in ``color``.

    ``vertices`` fills the pattern's slots in order: clique part, matching
    pairs as consecutive entries, then singletons (or consecutive triples
    for disjoint triangles).
    """

    pattern: Pattern
    color: EdgeColor
    vertices: tuple[int, ...]

    def verify(self, c: Coloring) -> bool:
        vs = self.vertices
        if len(vs) != self.pattern.vertex_count or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < c.n for v in vs):
            return False
        return all(c.color(vs[i], vs[j]) is self.color for i, j in self.pattern.edges())


# -- matchings ---------------------------------------------------------------

def find_matching(adj: Adjacency, s: int, goal: int, _failed: Optional[set] = None):
    """Return ``goal`` disjoint edges inside ``s`` or ``None`` if impossible.

    Depth-first: the lowest vertex of ``s`` is either left unmatched or paired
    with one of its neighbors.  Subproblems ``(s, goal)`` that already failed
    are remembered in ``_failed``.
    """
    if goal <= 0:
        return []
    if size(s) < 2 * goal:
        return None
    if _failed is None:
        _failed = set()
    key = (s, goal)
    if key in _failed:
        return None
    x = (s & -s).bit_length() - 1
    rest = s & ~(1 << x)
    for y in members(adj[x] & rest):
        sub = find_matching(adj, rest & ~(1 << y), goal - 1, _failed)
        if sub is not None:
            return [(x, y)] + sub
    sub = find_matching(adj, rest, goal, _failed)
    if sub is not None:
        return sub
    _failed.add(key)
    return None


def has_matching(adj: Adjacency, s: int, goal: int) -> bool:
    return find_matching(adj, s, goal) is not None


def matching_number(adj: Adjacency, s: int, cap: int | None = None) -> int:
    """Maximum matching size inside ``s`` (stopping early at ``cap``)."""
    top = size(s) // 2 if cap is None else min(cap, size(s) // 2)
    failed: set = set()
    for goal in range(top, 0, -1):
        if find_matching(adj, s, goal, failed) is not None:
            return goal
    return 0


def max_color_matching(c: Coloring, col: EdgeColor, s: int | None, goal: int) -> list[tuple[int, int]]:
    """A ``col``-matching inside ``s`` of size ``min(goal, nu)``.

    If the result is shorter than ``goal`` no matching of size ``goal`` exists.
    """
    adj = c.adjacency(col)
    s = full_set(c.n) if s is None else s & full_set(c.n)
    failed: set = set()
    for g in range(min(goal, size(s) // 2), 0, -1):
        m = find_matching(adj, s, g, failed)
        if m is not None:
            return m
    return []


# -- join patterns ------------------------------------------------------------

def iter_cliques(adj: Adjacency, cand: int, k: int, need_common: int = 0,
                 common: int | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(clique, common_nbhd)`` for every ``k``-clique inside ``cand``.

    Cliques come out in lexicographic order.  ``common`` is the common
    neighborhood of the vertices chosen so far (everything, initially);
    branches whose common neighborhood drops below ``need_common`` extra
    vertices are cut.
    """
    if common is None:
        common = -1  # all bits set
    yield from _cliques(adj, cand, k, need_common, common, ())


def _cliques(adj, cand, k, need_common, common, chosen):
    if k == 0:
        yield chosen, common
        return
    while cand:
        if size(cand) < k:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nxt_common = common & adj[v]
        # vertices still to pick plus the common part both live in nxt_common
        if need_common and size(nxt_common) < need_common + k - 1:
            continue
        yield from _cliques(adj, cand & adj[v], k - 1, need_common, nxt_common, chosen + (v,))


def find_join(adj: Adjacency, n: int, p: Join) -> Optional[tuple[int, ...]]:
    """Slot-ordered vertices of the first occurrence of ``p``, or ``None``."""
    a, b, c = p.a, p.b, p.c
    need = 2 * b + c
    everyone = full_set(n)
    for q, common in iter_cliques(adj, everyone, a, need):
        s = common & everyone
        if size(s) < need:
            continue
        m = find_matching(adj, s, b)
        if m is None:
            continue
        used = vset(v for e in m for v in e)
        singles = list(members(s & ~used))[:c]
        return q + tuple(v for e in m for v in e) + tuple(singles)
    return None


# -- disjoint triangles -------------------------------------------------------

def find_triangle_packing(adj: Adjacency, avail: int, t: int, _failed: Optional[set] = None):
    """``t`` vertex-disjoint triangles inside ``avail`` as a flat tuple, or ``None``."""
    if t == 0:
        return ()
    if size(avail) < 3 * t:
        return None
    if _failed is None:
        _failed = set()
    if (avail, t) in _failed:
        return None
    x = (avail & -avail).bit_length() - 1
    rest = avail & ~(1 << x)
    nx_ = adj[x] & rest
    for y in members(nx_):
        for z in members(nx_ & adj[y] & ~((1 << (y + 1)) - 1)):
            sub = find_triangle_packing(adj, rest & ~(1 << y) & ~(1 << z), t - 1, _failed)
            if sub is not None:
                return (x, y, z) + sub
    sub = find_triangle_packing(adj, rest, t, _failed)
    if sub is not None:
        return sub
    _failed.add((avail, t))
    return None


# -- public detectors ---------------------------------------------------------

def _check_size(c: Coloring, p: Pattern) -> None:
    if p.vertex_count > c.n:
        raise PatternTooLarge(f"{p} needs {p.vertex_count} vertices, coloring has {c.n}")


def find_mono_join(c: Coloring, col: EdgeColor, p: Join) -> Optional[Witness]:
    if not isinstance(p, Join):
        raise TypeError(f"expected a Join pattern, got {p!r}")
    _check_size(c, p)
    vs = find_join(c.adjacency(col), c.n, p)
    return None if vs is None else Witness(p, col, vs)


def find_mono_triangles(c: Coloring, col: EdgeColor, t: int) -> Optional[Witness]:
    p = Triangles(t)
    _check_size(c, p)
    vs = find_triangle_packing(c.adjacency(col), full_set(c.n), t)
    return None if vs is None else Witness(p, col, vs)


def contains_mono(c: Coloring, col: EdgeColor, p: Pattern) -> Optional[Witness]:
    """Witness for a ``col``-monochromatic copy of ``p`` in ``c``, else ``None``.

    Raises :class:`PatternTooLarge` when ``p`` has more vertices than ``c``.
    """
    if isinstance(p, Triangles):
        return find_mono_triangles(c, col, p.t)
    return find_mono_join(c, col, p)


def contains_mono_or_none(c: Coloring, col: EdgeColor, p: Pattern) -> Optional[Witness]:
    """Like :func:`contains_mono` but treats an oversized pattern as absent."""
    try:
        return contains_mono(c, col, p)
    except PatternTooLarge:
        return None


# -- brute-force oracle -------------------------------------------------------

def _pairings(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield (first, partner) + tail


def _triple_partitions(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for pair in itertools.combinations(range(len(rest)), 2):
        left = tuple(v for i, v in enumerate(rest) if i not in pair)
        for tail in _triple_partitions(left):
            yield (first, rest[pair[0]], rest[pair[1]]) + tail


def _slot_fillings(p: Pattern, subset: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if isinstance(p, Triangles):
        yield from _triple_partitions(subset)
        return
    for q in itertools.combinations(subset, p.a):
        rest = tuple(v for v in subset if v not in q)
        for matched in itertools.combinations(rest, 2 * p.b):
            singles = tuple(v for v in rest if v not in matched)
            for pairs in _pairings(matched):
                yield q + pairs + singles


def brute_force_contains(c: Coloring, col: EdgeColor, p: Pattern) -> Optional[Witness]:
    """Enumerate every vertex subset and role assignment; test oracle only."""
    k = p.vertex_count
    if k > c.n:
        raise PatternTooLarge(f"{p} needs {k} vertices, coloring has {c.n}")
    adj = c.adjacency(col)
    edges = p.edges()
    for subset in itertools.combinations(range(c.n), k):
        for slots in _slot_fillings(p, subset):
            if all(adj[slots[i]] >> slots[j] & 1 for i, j in edges):
                return Witness(p, col, slots)
    return None
