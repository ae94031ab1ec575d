import random

import pytest

from treeparity.trees import FreeTree


def random_tree(rng: random.Random, n: int) -> FreeTree:
    return FreeTree(n, tuple((v, rng.randrange(v)) for v in range(1, n)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20261014)
