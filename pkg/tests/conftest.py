from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from superfuzz import jsonio

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_matrix(name: str):
    return jsonio.load_matrix(fixture_path(name))


def load_model(name: str):
    return jsonio.load_model(fixture_path(name))


def load_state(name: str):
    return jsonio.load_state(fixture_path(name))


def load_json(name: str):
    return jsonio.read_json(fixture_path(name))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
