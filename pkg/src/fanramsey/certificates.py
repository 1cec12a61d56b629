"""Plain-text certificate format and verifier.

::

    ramsey-coloring v1
    n=4
    # optional comments
    R
    BR
    RRB

Row ``i`` (``i = 1..n-1``) has ``i`` characters; character ``j`` is the
color of edge ``(j, i)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .coloring import Coloring
from .detectors import Witness, contains_mono_or_none
from .errors import BadChar, BadMagic, BadN, BadRowLength
from .search.rules import ForbidRule

MAGIC = "ramsey-coloring v1"


def encode_coloring(c: Coloring, comments: Sequence[str] = ()) -> str:
    lines = [MAGIC, f"n={c.n}"]
    lines += [f"# {text}" for text in comments]
    for i in range(1, c.n):
        lines.append("".join("R" if c.red[i] >> j & 1 else "B" for j in range(i)))
    return "\n".join(lines) + "\n"


def decode_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].rstrip() != MAGIC:
        raise BadMagic(f"first line must be {MAGIC!r}", line=1)
    if len(lines) < 2:
        raise BadN("missing n= header", line=2)
    head = lines[1].rstrip()
    if not head.startswith("n=") or not head[2:].isdigit():
        raise BadN(f"expected n=<N>, got {head!r}", line=2)
    n = int(head[2:])
    if not 1 <= n <= 64:
        raise BadN(f"n must be in 1..64, got {n}", line=2)
    rows = [0] * n
    i = 1
    for lineno, raw in enumerate(lines[2:], start=3):
        body = raw.rstrip()
        if body.startswith("#"):
            continue
        if i >= n:
            raise BadRowLength(f"unexpected extra row {body!r}", line=lineno)
        if len(body) != i:
            raise BadRowLength(f"row for vertex {i} needs {i} characters, got {len(body)}",
                               line=lineno)
        for j, ch in enumerate(body):
            if ch == "R":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            elif ch != "B":
                raise BadChar(f"expected R or B, got {ch!r}", line=lineno, col=j + 1)
        i += 1
    if i != n:
        raise BadRowLength(f"expected {n - 1} rows, got {i - 1}", line=len(lines) + 1)
    return Coloring(n, tuple(rows))


def write_certificate(path: str | Path, c: Coloring, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(encode_coloring(c, comments))


def read_certificate(path: str | Path) -> Coloring:
    return decode_coloring(Path(path).read_text())


@dataclass
class VerifyReport:
    passed: bool
    n: int
    checked: list[ForbidRule] = field(default_factory=list)
    violated: Optional[ForbidRule] = None
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        if self.passed:
            rules = ", ".join(str(r) for r in self.checked)
            return f"PASS n={self.n}: no {rules}"
        return (f"FAIL n={self.n}: {self.violated} found at "
                f"{' '.join(map(str, self.witness.vertices))}")


def verify_certificate(source, forbids: Iterable[ForbidRule]) -> VerifyReport:
    """Check that a coloring (or certificate text) avoids every forbidden pattern.

    ``source`` may be a :class:`Coloring`, certificate text, or a path.
    Patterns larger than the coloring are trivially absent.
    """
    if isinstance(source, Coloring):
        c = source
    elif isinstance(source, Path):
        c = read_certificate(source)
    else:
        c = decode_coloring(source)
    forbids = list(forbids)
    for rule in forbids:
        w = contains_mono_or_none(c, rule.color, rule.pattern)
        if w is not None:
            return VerifyReport(False, c.n, forbids, rule, w)
    return VerifyReport(True, c.n, forbids)

