import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.graphs.graph import Graph, complete, path  # noqa: E402


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep configuration and logs out of the real home directory."""
    home = tmp_path / 'home'
    monkeypatch.setenv('THINNESS_LAB_HOME', str(home))
    return home


@pytest.fixture
def c4() -> Graph:
    """The cycle 0-1-2-3-0."""
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def claw() -> Graph:
    """Center 0 with leaves 1, 2, 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def p3() -> Graph:
    return path(3)


@pytest.fixture
def k3() -> Graph:
    return complete(3)
