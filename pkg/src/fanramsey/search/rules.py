"""Search configuration and result records."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..coloring import Coloring, EdgeColor
from ..errors import BadParams, OutOfRange
from ..patterns import Pattern, format_pattern, parse_pattern


@dataclass(frozen=True)
class ForbidRule:
    """Forbid a ``color``-monochromatic copy of ``pattern``."""

    color: EdgeColor
    pattern: Pattern

    def __str__(self) -> str:
        return f"{self.color}:{format_pattern(self.pattern)}"

    @classmethod
    def parse(cls, text: str) -> "ForbidRule":
        """``red:fan:3`` style."""
        col, sep, pat = text.partition(":")
        if not sep:
            raise BadParams(f"expected COLOR:PATTERN, got {text!r}")
        try:
            color = EdgeColor.parse(col)
        except ValueError as exc:
            raise BadParams(str(exc)) from None
        return cls(color, parse_pattern(pat))


@dataclass(frozen=True)
class DegreeCap:
    """Every vertex has at most ``cap`` edges of ``color``."""

    color: EdgeColor
    cap: int

    def __post_init__(self):
        if self.cap < 0:
            raise BadParams(f"degree cap must be non-negative, got {self.cap}")

    def __str__(self) -> str:
        return f"degree-cap {self.color}:{self.cap}"


@dataclass(frozen=True)
class GadgetAtTarget:
    """Forbid ``pattern`` in ``color`` at every level, but only in runs whose
    target equals ``target_n``.

    Sound when any coloring of ``K_target_n`` avoiding the forbids is known
    to avoid the gadget: a gadget in a partial coloring survives extension.
    """

    color: EdgeColor
    pattern: Pattern
    target_n: int

    def __str__(self) -> str:
        return f"gadget {self.color}:{format_pattern(self.pattern)}@{self.target_n}"

    @classmethod
    def parse(cls, text: str) -> "GadgetAtTarget":
        """``blue:join:4,0,2@14`` style."""
        body, sep, n = text.rpartition("@")
        if not sep:
            raise BadParams(f"expected COLOR:PATTERN@N, got {text!r}")
        rule = ForbidRule.parse(body)
        try:
            target = int(n)
        except ValueError:
            raise BadParams(f"bad target in {text!r}") from None
        return cls(rule.color, rule.pattern, target)


PruneRule = Union[DegreeCap, GadgetAtTarget]


@dataclass(frozen=True)
class SearchSpec:
    target_n: int
    forbids: tuple[ForbidRule, ...]
    prunes: tuple[PruneRule, ...] = ()
    time_budget: float = 0.0
    swap_symmetric: bool = False

    def __post_init__(self):
        object.__setattr__(self, "forbids", tuple(self.forbids))
        object.__setattr__(self, "prunes", tuple(self.prunes))
        if not 1 <= self.target_n <= 64:
            raise OutOfRange(f"target_n must be in 1..64, got {self.target_n}")
        if not self.forbids:
            raise BadParams("a search needs at least one forbidden pattern")
        if self.swap_symmetric and not self.is_color_symmetric():
            raise BadParams("swap_symmetric requires color-symmetric forbids and prunes")

    def active_patterns(self) -> list[tuple[EdgeColor, Pattern]]:
        """Forbidden patterns plus gadgets that apply at this target."""
        out = [(r.color, r.pattern) for r in self.forbids]
        for p in self.prunes:
            if isinstance(p, GadgetAtTarget) and p.target_n == self.target_n:
                out.append((p.color, p.pattern))
        return list(dict.fromkeys(out))

    def degree_caps(self) -> dict[EdgeColor, int]:
        caps: dict[EdgeColor, int] = {}
        for p in self.prunes:
            if isinstance(p, DegreeCap):
                caps[p.color] = min(p.cap, caps.get(p.color, p.cap))
        return caps

    def is_color_symmetric(self) -> bool:
        pats = set(self.active_patterns())
        if {(c.complement(), p) for c, p in pats} != pats:
            return False
        caps = self.degree_caps()
        return all(caps.get(c.complement()) == v for c, v in caps.items())

    def to_dict(self) -> dict:
        return {
            "target_n": self.target_n,
            "forbids": [str(r) for r in self.forbids],
            "prunes": [str(p) for p in self.prunes],
            "time_budget": self.time_budget,
            "swap_symmetric": self.swap_symmetric,
        }


@dataclass
class SearchResult:
    """Outcome of a level-by-level search.

    ``counts[k]`` is the number of canonical classes of colorings of ``K_k``
    that survive every forbid and prune (``counts[0]`` is unused and 0).
    """

    spec: SearchSpec
    counts: list[int] = field(default_factory=lambda: [0])
    exhausted: bool = False
    samples: dict[int, Coloring] = field(default_factory=dict)
    elapsed: float = 0.0
    budget_exceeded: bool = False
    level_seconds: list[float] = field(default_factory=lambda: [0.0])

    @property
    def max_level_reached(self) -> int:
        return len(self.counts) - 1

    def count(self, k: int) -> int:
        return self.counts[k] if k < len(self.counts) else 0

    @property
    def first_empty_level(self) -> Optional[int]:
        for k, n in enumerate(self.counts):
            if k and n == 0:
                return k
        return None
