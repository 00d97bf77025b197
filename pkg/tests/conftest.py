import pytest
from hypothesis import settings

from ybknot import fixtures

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def pairs():
    """Both fixture switch pairs keyed by ``def:model``."""
    return {f"{d}:{m}": fixtures.switch_pair(d, m) for d, m in fixtures.SWITCH_PAIRS}


@pytest.fixture(scope="session")
def models():
    return {name: fixtures.model(name) for name in fixtures.MODELS}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
