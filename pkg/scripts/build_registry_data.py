"""Regenerate the archived search reports and certificates behind the registry.

Every registry row with a computable value is searched with an optional time
budget.  Rows whose search exhausts at the expected level get a JSON report;
every row with a clean coloring on ``value - 1`` vertices gets a certificate.

    python scripts/build_registry_data.py [--budget SECONDS] [--only SLUG ...]
"""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from fanramsey.certificates import verify_certificate, write_certificate
from fanramsey.coloring import BLUE, RED, new_complete
from fanramsey.constructions import fan_fan_extremal, star_fan_extremal
from fanramsey.patterns import Join, format_pattern
from fanramsey.registry import known_values_table, row_slug
from fanramsey.search import ForbidRule, SearchSpec, derive_star_degree_cap, exhaustive_search
from fanramsey.search.report import search_report, write_report

DATA = Path(__file__).resolve().parents[1] / "src" / "fanramsey" / "data"
log = logging.getLogger("build")


def known_construction(red, blue, value):
    if red == blue and isinstance(red, Join) and red.a == 1 and red.c == 0 and red.b % 2:
        c = fan_fan_extremal(red.b)
        if c.n == value - 1:
            return c
    if isinstance(red, Join) and (red.a, red.b) == (1, 0) and blue == Join(1, red.c, 0):
        return star_fan_extremal(red.c)
    if isinstance(red, Join) and (red.a, red.b) == (1, 0) and blue == Join(0, red.c, 0):
        # all blue: no red star, and a perfect matching needs one vertex more
        return new_complete(2 * red.c - 1, BLUE)
    return None


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=float, default=600.0)
    ap.add_argument("--only", nargs="*")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    (DATA / "reports").mkdir(parents=True, exist_ok=True)
    (DATA / "certificates").mkdir(parents=True, exist_ok=True)

    seen = set()
    for row in known_values_table():
        red, blue = row.red_pattern, row.blue_pattern
        slug = row_slug(red, blue)
        if slug in seen or row.relation != "=":
            continue
        if args.only and slug not in args.only:
            continue
        seen.add(slug)
        forbids = (ForbidRule(RED, red), ForbidRule(BLUE, blue))
        spec = SearchSpec(row.value, forbids, tuple(derive_star_degree_cap(forbids)),
                          args.budget, swap_symmetric=(red == blue))
        res = exhaustive_search(spec)
        witness = known_construction(red, blue, row.value)
        if res.exhausted and res.first_empty_level == row.value:
            write_report(DATA / "reports" / f"{slug}.json", search_report(res))
            log.info("%s: exhausted at %d in %.1fs", slug, row.value, res.elapsed)
            if witness is None:
                witness = res.samples.get(row.value - 1)
        else:
            log.info("%s: not settled within budget (reached %d)", slug, res.max_level_reached)
        if witness is None:
            continue
        assert verify_certificate(witness, forbids).passed, slug
        note = (f"no red {format_pattern(red)}, no blue {format_pattern(blue)} "
                f"on {witness.n} vertices")
        write_certificate(DATA / "certificates" / f"{slug}.txt", witness, [note])


if __name__ == "__main__":
    main()
