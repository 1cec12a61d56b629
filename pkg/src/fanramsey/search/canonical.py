"""Canonical forms of colorings up to vertex relabeling (colors are not swapped).

The engine labels the red graph with nauty (through ``pynauty``) and
serializes the relabeled coloring.  :func:`canonical_form_exact` is the
permutation-minimum definition, kept as an independent oracle for small n.
"""
from __future__ import annotations

from typing import Sequence

import pynauty

from ..coloring import Coloring, members

EXACT_LIMIT = 8


def _encode(n: int, rows: Sequence[int]) -> bytes:
    width = (n + 7) // 8
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in rows)


def canonical_rows(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    """Red rows of the canonically relabeled coloring."""
    if n == 1:
        return (0,)
    g = pynauty.Graph(n, adjacency_dict={v: list(members(r)) for v, r in enumerate(rows) if r})
    lab = pynauty.canon_label(g)
    new = [0] * n
    for i, v in enumerate(lab):
        new[v] = i
    out = [0] * n
    for v, r in enumerate(rows):
        m = 0
        for u in members(r):
            m |= 1 << new[u]
        out[new[v]] = m
    return tuple(out)


def canonical_key(n: int, rows: Sequence[int]) -> tuple[bytes, tuple[int, ...]]:
    """``(form, canonical_rows)`` for raw red rows."""
    canon = canonical_rows(n, rows)
    return _encode(n, canon), canon


def canonical_form(c: Coloring) -> bytes:
    """Byte string equal for two colorings iff one is a relabeling of the other."""
    return canonical_key(c.n, c.red)[0]


def canonical_coloring(c: Coloring) -> Coloring:
    return Coloring(c.n, canonical_rows(c.n, c.red))


def swap_rows(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~r & ~(1 << v) for v, r in enumerate(rows))


def swap_invariant_key(n: int, rows: Sequence[int]) -> tuple[bytes, tuple[int, ...]]:
    """Canonical key that also identifies a coloring with its color swap."""
    return min(canonical_key(n, rows), canonical_key(n, swap_rows(n, rows)))


def canonical_form_exact(c: Coloring) -> str:
    """Lexicographically least upper-triangle color string over all relabelings.

    Column ``i`` of the string (edges ``(j, i)``, ``j < i``) depends only on
    the first ``i + 1`` positions, so permutations are built position by
    position and a prefix already larger than the best is abandoned.  Still
    exhaustive in the worst case; intended as an oracle for ``n <= EXACT_LIMIT``.
    """
    n = c.n
    red = c.red
    best: list[str] = ["~"]

    def place(chosen: list[int], prefix: str, left: int) -> None:
        if not left:
            if prefix < best[0]:
                best[0] = prefix
            return
        for v in members(left):
            col = "".join("R" if red[u] >> v & 1 else "B" for u in chosen)
            nxt = prefix + col
            if nxt > best[0][:len(nxt)]:
                continue
            chosen.append(v)
            place(chosen, nxt, left & ~(1 << v))
            chosen.pop()

    place([], "", (1 << n) - 1)
    return f"{n}:{best[0]}"
