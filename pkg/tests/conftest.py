import pytest
from hypothesis import HealthCheck, settings

from persistdist.interval import rectangle, validate

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def square():
    return rectangle(0, 0, 2, 2)


@pytest.fixture
def square13():
    return rectangle(1, 1, 3, 3)


@pytest.fixture
def l_shape():
    return validate([(0, 3), (0, 0), (3, 0)], [(0, 3), (1, 3), (1, 1), (3, 1), (3, 0)])


@pytest.fixture
def anti_l():
    # [2,3]x[0,3] ∪ [0,3]x[2,3]
    return validate([(0, 3), (0, 2), (2, 2), (2, 0), (3, 0)], [(0, 3), (3, 3), (3, 0)])


@pytest.fixture
def quadrant():
    inf = float("inf")
    return validate([(0, inf), (0, 0), (inf, 0)], [(0, inf), (inf, inf), (inf, 0)])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module is None or not module.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.REPORT:
        terminalreporter.write_line(line)
