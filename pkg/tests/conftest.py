import random

import pytest

from fanramsey.coloring import Coloring


def all_colorings(n):
    """Every red/blue coloring of K_n, in edge-bitmask order."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Coloring(n, tuple(rows))


def random_colorings(n, count, seed):
    rng = random.Random(seed)
    return [Coloring.random(n, rng) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
