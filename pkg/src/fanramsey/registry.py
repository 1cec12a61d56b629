"""Known Ramsey values for the pattern families handled here.

Each row records how the value is backed in this package:

``verified-by-search``
    an archived search report shows the first empty level equals the value;
``certificate-only``
    an archived coloring on ``value - 1`` vertices avoids both patterns,
    the matching upper bound is taken from the literature;
``cited``
    literature only, nothing is computed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .patterns import Pattern, book, fan, format_pattern, matching, star, triangles

VERIFIED = "verified-by-search"
CERTIFICATE = "certificate-only"
CITED = "cited"


@dataclass(frozen=True)
class KnownValue:
    red_pattern: Pattern
    blue_pattern: Pattern
    value: int
    status: str
    source: str
    relation: str = "="
    report: Optional[str] = None
    certificate: Optional[str] = None

    def __post_init__(self):
        if self.value < 2:
            raise ValueError(f"Ramsey values are at least 2, got {self.value}")
        if self.status not in (VERIFIED, CERTIFICATE, CITED):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == VERIFIED and not self.report:
            raise ValueError("a verified-by-search row needs an exhaustion report")
        if self.status == CERTIFICATE and not self.certificate:
            raise ValueError("a certificate-only row needs a certificate")

    @property
    def slug(self) -> str:
        return row_slug(self.red_pattern, self.blue_pattern)

    def describe(self) -> str:
        return (f"R({format_pattern(self.red_pattern)}, {format_pattern(self.blue_pattern)}) "
                f"{self.relation} {self.value}")


def row_slug(red: Pattern, blue: Pattern) -> str:
    def one(p):
        return format_pattern(p).replace(":", "").replace(",", "-")
    return f"{one(red)}__{one(blue)}"


def _data(*parts: str):
    return resources.files("fanramsey").joinpath("data", *parts)


def load_report(name: str) -> dict:
    return json.loads(_data("reports", name).read_text())


def load_certificate_text(name: str) -> str:
    return _data("certificates", name).read_text()


def _archived(kind: str, name: str) -> bool:
    return _data(kind, name).is_file()


THM_STAR_FAN = "R(K1,n, Fn) = 3n - eps (eps = 0 for odd n, 1 for even n)"
THM_STAR_MATCHING = "R(K1,n, nK2) = 2n (Chen-Li)"
THM_FAN_MATCHING = "R(Fm, nK2) = max{m,n} + m + n (Lin-Li)"
THM_STAR_F2 = "R(K1,n, Fm) = 2n + 1 for n >= m^2 - m (Zhang-Broersma-Chen)"
SRC_F2 = "R2(F2) = 9 (Lin-Li)"
SRC_F3 = "R2(F3) = 14"
SRC_NK3 = "R2(nK3) = 5n for n >= 2 (Burr-Erdos-Spencer)"
SRC_BOOK = "R2(Bn) <= 4n + 2 (Rousseau-Sheehan)"


def _row(red, blue, value, source, *, verify_up_to_search: bool = True) -> KnownValue:
    """Pick the strongest status backed by archived files."""
    slug = row_slug(red, blue)
    report = f"{slug}.json"
    cert = f"{slug}.txt"
    if verify_up_to_search and _archived("reports", report):
        data = load_report(report)
        first = next((lv["k"] for lv in data["levels"] if lv["count"] == 0), None)
        if data["exhausted"] and first == value:
            return KnownValue(red, blue, value, VERIFIED, source, report=report,
                              certificate=cert if _archived("certificates", cert) else None)
    if _archived("certificates", cert):
        return KnownValue(red, blue, value, CERTIFICATE, source, certificate=cert)
    return KnownValue(red, blue, value, CITED, source)


def known_values_table() -> list[KnownValue]:
    rows = []
    for n in range(1, 9):
        eps = 0 if n % 2 else 1
        rows.append(_row(star(n), fan(n), 3 * n - eps, THM_STAR_FAN))
    for n in range(1, 7):
        rows.append(_row(star(n), matching(n), 2 * n, THM_STAR_MATCHING))
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (1, 3), (3, 1)]:
        rows.append(_row(fan(m), matching(n), max(m, n) + m + n, THM_FAN_MATCHING))
    # n = 2 coincides with the star/fan row above
    for n in (3, 4):
        rows.append(_row(star(n), fan(2), 2 * n + 1, THM_STAR_F2))
    rows.append(_row(fan(2), fan(2), 9, SRC_F2))
    rows.append(_row(fan(3), fan(3), 14, SRC_F3))
    for n in (2, 3):
        rows.append(_row(triangles(n), triangles(n), 5 * n, SRC_NK3))
    for n in (1, 2, 3):
        rows.append(KnownValue(book(n), book(n), 4 * n + 2, CITED, SRC_BOOK, relation="<="))
    return rows


def lookup(red: Pattern, blue: Pattern) -> Optional[KnownValue]:
    for row in known_values_table():
        if row.red_pattern == red and row.blue_pattern == blue:
            return row
    return None
