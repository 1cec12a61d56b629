"""Target subgraphs: joins ``K_a + (b*K2 u c*K1)`` and disjoint triangles.

Every named family reduces to one of the two shapes::

    star(n)      -> Join(1, 0, n)
    fan(n)       -> Join(1, n, 0)
    book(n)      -> Join(2, 0, n)
    clique(m)    -> Join(m, 0, 0)
    matching(n)  -> Join(0, n, 0)
    triangles(t) -> Triangles(t)

Containment is always subgraph containment: singletons only need to be
joined to the clique part, edges among them are unconstrained.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadParams


@dataclass(frozen=True, order=True)
class Join:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0 or self.a + 2 * self.b + self.c < 1:
            raise BadParams(f"invalid join parameters ({self.a}, {self.b}, {self.c})")

    @property
    def vertex_count(self) -> int:
        return self.a + 2 * self.b + self.c

    def edges(self) -> list[tuple[int, int]]:
        """Required edges over slots: clique, then matching pairs, then singletons."""
        a, b, n = self.a, self.b, self.vertex_count
        out = [(i, j) for i in range(a) for j in range(i + 1, n)]
        out += [(a + 2 * i, a + 2 * i + 1) for i in range(b)]
        return out

    def __str__(self) -> str:
        return format_pattern(self)


@dataclass(frozen=True, order=True)
class Triangles:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise BadParams(f"need at least one triangle, got {self.t}")

    @property
    def vertex_count(self) -> int:
        return 3 * self.t

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(0, 3 * self.t, 3):
            out += [(i, i + 1), (i, i + 2), (i + 1, i + 2)]
        return out

    def __str__(self) -> str:
        return format_pattern(self)


Pattern = Union[Join, Triangles]

_ARITY = {
    "star": 1, "fan": 1, "book": 1, "clique": 1,
    "matching": 1, "triangles": 1, "join": 3,
}


def make_pattern(kind: str, *params: int) -> Pattern:
    if kind not in _ARITY:
        raise BadParams(f"unknown pattern kind {kind!r}")
    if len(params) != _ARITY[kind]:
        raise BadParams(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(params)}")
    if not all(isinstance(p, int) and not isinstance(p, bool) for p in params):
        raise BadParams(f"{kind} parameters must be integers")
    if kind == "join":
        return Join(*params)
    (n,) = params
    if n < 1:
        raise BadParams(f"{kind} needs a positive parameter, got {n}")
    return {
        "star": lambda: Join(1, 0, n),
        "fan": lambda: Join(1, n, 0),
        "book": lambda: Join(2, 0, n),
        "clique": lambda: Join(n, 0, 0),
        "matching": lambda: Join(0, n, 0),
        "triangles": lambda: Triangles(n),
    }[kind]()


def star(n: int) -> Join:
    return make_pattern("star", n)


def fan(n: int) -> Join:
    return make_pattern("fan", n)


def book(n: int) -> Join:
    return make_pattern("book", n)


def clique(m: int) -> Join:
    return make_pattern("clique", m)


def matching(n: int) -> Join:
    return make_pattern("matching", n)


def triangles(t: int) -> Triangles:
    return make_pattern("triangles", t)


def join(a: int, b: int, c: int) -> Join:
    return make_pattern("join", a, b, c)


def pattern_vertex_count(p: Pattern) -> int:
    return p.vertex_count


def parse_pattern(text: str) -> Pattern:
    """Parse ``kind:N`` or ``join:A,B,C`` (case-sensitive, no spaces)."""
    kind, sep, rest = text.partition(":")
    if not sep or not rest:
        raise BadParams(f"pattern must look like kind:N, got {text!r}")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise BadParams(f"non-integer parameter in {text!r}") from None
    if any(x.strip() != x or not x for x in rest.split(",")):
        raise BadParams(f"malformed parameter list in {text!r}")
    return make_pattern(kind, *params)


def format_pattern(p: Pattern) -> str:
    """Inverse of :func:`parse_pattern`, preferring the named family."""
    if isinstance(p, Triangles):
        return f"triangles:{p.t}"
    a, b, c = p.a, p.b, p.c
    if a == 1 and b == 0 and c >= 1:
        return f"star:{c}"
    if a == 1 and b >= 1 and c == 0:
        return f"fan:{b}"
    if a == 2 and b == 0 and c >= 1:
        return f"book:{c}"
    if a >= 1 and b == 0 and c == 0:
        return f"clique:{a}"
    if a == 0 and b >= 1 and c == 0:
        return f"matching:{b}"
    return f"join:{a},{b},{c}"
