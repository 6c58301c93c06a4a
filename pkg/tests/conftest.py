from pathlib import Path

import pytest

from zmtool.config import get_settings
from zmtool.services.zm_core import validate

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def zm_env(monkeypatch):
    """Set ZMTOOL_* variables for one test; settings are re-read on both sides."""
    def setenv(name: str, value) -> None:
        monkeypatch.setenv(name, str(value))
        get_settings.cache_clear()
    get_settings.cache_clear()
    yield setenv
    monkeypatch.undo()
    get_settings.cache_clear()


@pytest.fixture
def dic3():
    """The dicyclic group of order 12."""
    return validate(3, 4, 2)


@pytest.fixture
def s3():
    return validate(3, 2, 2)


@pytest.fixture
def zm_5_4_2():
    return validate(5, 4, 2)


@pytest.fixture
def trivial():
    return validate(1, 1, 0)


@pytest.fixture
def c5():
    return validate(1, 5, 0)


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text()
    return read
