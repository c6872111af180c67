import random
import sys

import pytest
from hypothesis import HealthCheck, settings

from polardet.gaussian import gauss

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def random_gauss_matrix(rng: random.Random, rows: int, cols: int, bound: int = 2, real: bool = False):
    def entry():
        im = 0 if real else rng.randint(-bound, bound)
        return gauss(rng.randint(-bound, bound), im)

    return [[entry() for _ in range(cols)] for _ in range(rows)]


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
