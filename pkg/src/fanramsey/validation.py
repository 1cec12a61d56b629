"""Input coercion shared by the estimator facade and the CLI."""
from __future__ import annotations

from .coloring import Coloring, EdgeColor
from .errors import BadParams
from .patterns import Join, Pattern, Triangles, parse_pattern


def check_coloring(x) -> Coloring:
    """Accept a ``Coloring``, certificate text, or a symmetric 0/1 matrix (1 = red)."""
    if isinstance(x, Coloring):
        return x
    if isinstance(x, str):
        from .certificates import decode_coloring
        return decode_coloring(x)
    rows = [list(r) for r in x]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise BadParams("adjacency matrix must be square")
    red = []
    for v, r in enumerate(rows):
        mask = 0
        for u, val in enumerate(r):
            if u == v:
                if val:
                    raise BadParams(f"nonzero diagonal entry at {v}")
                continue
            if bool(val) != bool(rows[u][v]):
                raise BadParams(f"matrix not symmetric at ({u}, {v})")
            if val:
                mask |= 1 << u
        red.append(mask)
    return Coloring(n, tuple(red))


def check_pattern(p) -> Pattern:
    if isinstance(p, (Join, Triangles)):
        return p
    if isinstance(p, str):
        return parse_pattern(p)
    raise BadParams(f"cannot interpret {p!r} as a pattern")


def check_color(col) -> EdgeColor:
    if isinstance(col, EdgeColor):
        return col
    try:
        return EdgeColor.parse(col)
    except (ValueError, AttributeError):
        raise BadParams(f"cannot interpret {col!r} as a color") from None


def check_colorings(xs) -> list[Coloring]:
    if isinstance(xs, (Coloring, str)):
        xs = [xs]
    return [check_coloring(x) for x in xs]


def as_matrix(c: Coloring) -> list[list[int]]:
    return [[c.red[v] >> u & 1 for u in range(c.n)] for v in range(c.n)]
