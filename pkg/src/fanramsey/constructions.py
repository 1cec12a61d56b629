"""Deterministic extremal colorings (lower-bound witnesses)."""
from __future__ import annotations

from .coloring import Coloring, full_set
from .errors import Infeasible, OutOfRange, ParityError


def parity_epsilon(n: int) -> int:
    """0 for odd ``n``, 1 for even ``n``."""
    return 0 if n % 2 else 1


def circulant_red_regular(h: int, d: int) -> Coloring:
    """Coloring of ``K_h`` whose red class is a ``d``-regular circulant.

    Offsets are ``1..d/2`` for even ``d``; for odd ``d`` the antipodal offset
    ``h/2`` is added, which needs ``h`` even.
    """
    if h < 1 or not 0 <= d <= h - 1:
        raise OutOfRange(f"need 0 <= d <= h-1 with h >= 1, got h={h}, d={d}")
    if h * d % 2:
        raise Infeasible(f"no {d}-regular graph on {h} vertices (h*d is odd)")
    offsets = set(range(1, d // 2 + 1))
    if d % 2:
        offsets.add(h // 2)
    rows = []
    for v in range(h):
        row = 0
        for off in offsets:
            row |= 1 << ((v + off) % h) | 1 << ((v - off) % h)
        rows.append(row)
    return Coloring(h, tuple(rows))


def star_fan_extremal(n: int) -> Coloring:
    """Red ``K_n`` joined in blue to an ``(n-1)``-red-regular block.

    The result has ``3n - 1 - eps`` vertices, every red degree is ``n - 1``,
    and it contains neither a red ``star(n)`` nor a blue ``fan(n)``.
    """
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    h = 2 * n - 1 - parity_epsilon(n)
    block = circulant_red_regular(h, n - 1).red if h else ()
    total = n + h
    clique = full_set(n)
    rows = [clique & ~(1 << v) for v in range(n)]
    rows += [row << n for row in block]
    return Coloring(total, tuple(rows))


# pentagon positions 0..4 hold: red K_n, blue K_n, blue K_n, red K_n, one vertex
_BLOCK_INSIDE_RED = (True, False, False, True, None)


def fan_fan_extremal(n: int) -> Coloring:
    """Blow-up of the triangle-free pentagon coloring on ``4n + 1`` vertices.

    Cyclically adjacent blocks are joined in red, blocks at distance two in
    blue.  Neither color contains ``fan(n)`` for odd ``n``.
    """
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    if n % 2 == 0:
        raise ParityError(f"the pentagon blow-up needs odd n, got {n}")
    sizes = [n, n, n, n, 1]
    starts = [0]
    for s in sizes[:-1]:
        starts.append(starts[-1] + s)
    masks = [full_set(s) << st for s, st in zip(sizes, starts)]
    total = sum(sizes)
    rows = [0] * total
    for i in range(5):
        red_to = masks[(i + 1) % 5] | masks[(i - 1) % 5]
        if _BLOCK_INSIDE_RED[i]:
            red_to |= masks[i]
        for v in range(starts[i], starts[i] + sizes[i]):
            rows[v] = red_to & ~(1 << v)
    return Coloring(total, tuple(rows))


def pentagon() -> Coloring:
    """``K_5`` with a red 5-cycle and blue diagonals."""
    return circulant_red_regular(5, 2)
