"""Red/blue edge-colorings of complete graphs stored as red-adjacency bitsets.

A vertex set is a plain ``int`` used as a bitmask over ``0..n-1``.  Only the
red class is stored; an edge is blue exactly when it is not red.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptySet, OutOfRange, SelfLoop

MAX_VERTICES = 64


class EdgeColor(enum.Enum):
    RED = "R"
    BLUE = "B"

    def complement(self) -> "EdgeColor":
        return EdgeColor.BLUE if self is EdgeColor.RED else EdgeColor.RED

    @classmethod
    def parse(cls, text: str) -> "EdgeColor":
        """Accept ``red``/``blue`` (any case) or the single letters ``R``/``B``."""
        key = text.strip().lower()
        if key in ("red", "r"):
            return cls.RED
        if key in ("blue", "b"):
            return cls.BLUE
        raise ValueError(f"unknown color {text!r}")

    def __str__(self) -> str:
        return self.name.lower()


RED = EdgeColor.RED
BLUE = EdgeColor.BLUE


# -- vertex-set helpers -------------------------------------------------------

def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: int) -> int:
    return mask.bit_count()


def full_set(n: int) -> int:
    return (1 << n) - 1


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise OutOfRange(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")


@dataclass(frozen=True)
class Coloring:
    """A 2-edge-colored complete graph on ``n`` vertices.

    ``red`` holds one bitmask per vertex; bit ``u`` of ``red[v]`` is set iff
    edge ``uv`` is red.  Instances are immutable; ``assign_color`` returns a
    new coloring.
    """

    n: int
    red: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        if len(self.red) != self.n:
            raise OutOfRange(f"expected {self.n} adjacency rows, got {len(self.red)}")
        full = full_set(self.n)
        for v, row in enumerate(self.red):
            if row & ~full:
                raise OutOfRange(f"row {v} names a vertex >= n")
            if row >> v & 1:
                raise SelfLoop(f"vertex {v} is red-adjacent to itself")
            for u in members(row):
                if not self.red[u] >> v & 1:
                    raise ValueError(f"red adjacency not symmetric at ({u}, {v})")

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, red: Sequence[int]) -> "Coloring":
        return cls(len(red), tuple(red))

    @classmethod
    def from_red_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Coloring":
        _check_n(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None, p_red: float = 0.5) -> "Coloring":
        rng = rng or random.Random()
        return cls.from_red_edges(
            n, ((u, v) for v in range(n) for u in range(v) if rng.random() < p_red)
        )

    # -- queries --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def color(self, u: int, v: int) -> EdgeColor:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"no edge from {u} to itself")
        return RED if self.red[u] >> v & 1 else BLUE

    def adjacency(self, col: EdgeColor) -> tuple[int, ...]:
        """Per-vertex neighborhoods in color ``col``."""
        if col is RED:
            return self.red
        full = full_set(self.n)
        return tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.red))

    def degree(self, v: int, col: EdgeColor) -> int:
        return size(color_neighborhood(self, v, col))

    def edges(self, col: EdgeColor) -> list[tuple[int, int]]:
        adj = self.adjacency(col)
        return [(u, v) for v in range(self.n) for u in members(adj[v] & ((1 << v) - 1))]

    def edge_count(self, col: EdgeColor) -> int:
        return sum(size(row) for row in self.adjacency(col)) // 2

    def swap_colors(self) -> "Coloring":
        return Coloring(self.n, self.adjacency(BLUE))

    def relabel(self, perm: Sequence[int]) -> "Coloring":
        """Return the coloring where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.red):
            rows[perm[v]] = vset(perm[u] for u in members(row))
        return Coloring(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, red_edges={self.edge_count(RED)})"


def new_complete(n: int, default: EdgeColor = BLUE) -> Coloring:
    _check_n(n)
    if default is BLUE:
        return Coloring(n, (0,) * n)
    full = full_set(n)
    return Coloring(n, tuple(full & ~(1 << v) for v in range(n)))


def assign_color(c: Coloring, u: int, v: int, col: EdgeColor) -> Coloring:
    c._check_vertex(u)
    c._check_vertex(v)
    if u == v:
        raise SelfLoop(f"cannot color a loop at {u}")
    rows = list(c.red)
    if col is RED:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    else:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Coloring(c.n, tuple(rows))


def color_neighborhood(c: Coloring, v: int, col: EdgeColor) -> int:
    c._check_vertex(v)
    if col is RED:
        return c.red[v]
    return full_set(c.n) & ~c.red[v] & ~(1 << v)


def common_color_neighborhood(c: Coloring, s: int, col: EdgeColor) -> int:
    if not s:
        raise EmptySet("common neighborhood of the empty set is undefined")
    if s >> c.n:
        raise OutOfRange("vertex set names a vertex >= n")
    out = full_set(c.n)
    for v in members(s):
        out &= color_neighborhood(c, v, col)
    return out


def induced_subcoloring(c: Coloring, s: int) -> Coloring:
    """Restrict ``c`` to ``s``, relabeling its members ``0..|s|-1`` in order."""
    if not s:
        raise EmptySet("cannot induce on the empty set")
    if s >> c.n:
        raise OutOfRange("vertex set names a vertex >= n")
    keep = list(members(s))
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(vset(index[u] for u in members(c.red[v] & s)) for v in keep)
    return Coloring(len(keep), rows)
