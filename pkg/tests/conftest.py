"""Pytest fixtures for testing."""

import pytest
from hypothesis import settings as hypothesis_settings

from app.core.cache import reset_enumeration_cache
from app.core.config import get_settings
from app.core.metrics import reset_metrics
from app.services.dessin import make_marked_graph
from app.services.maps import build_map
from app.services.maps.permutations import perm_from_cycles

hypothesis_settings.register_profile("default", max_examples=40, deadline=None)
hypothesis_settings.load_profile("default")


@pytest.fixture(autouse=True)
def _isolated_state(monkeypatch):
    """Fresh settings, in-memory enumeration cache and empty timings per test."""
    monkeypatch.delenv("MONODROMY_ATLAS_CACHE", raising=False)
    get_settings.cache_clear()
    reset_enumeration_cache()
    reset_metrics()
    yield
    get_settings.cache_clear()
    reset_enumeration_cache()
    reset_metrics()


def _graph(n, sigma_cycles, alpha_cycles, marks):
    m = build_map(n, perm_from_cycles(sigma_cycles, n), perm_from_cycles(alpha_cycles, n))
    return make_marked_graph(m, marks)


@pytest.fixture
def single_edge():
    """One edge joining an A2 end to a B2 end: [A2+B2], index 1."""
    return _graph(2, [], [(0, 1)], {0: "A2", 1: "B2"})


@pytest.fixture
def theta():
    """Two trivalent vertices joined by three edges: [2A6], three faces."""
    return _graph(6, [(0, 1, 2), (3, 4, 5)], [(0, 3), (1, 5), (2, 4)], {})


@pytest.fixture
def star_a():
    """One trivalent vertex with three A2 ends: [A6+3A2]."""
    return _graph(6, [(0, 1, 2)], [(0, 3), (1, 4), (2, 5)], {3: "A2", 4: "A2", 5: "A2"})


@pytest.fixture
def star_b():
    """One trivalent vertex with three B2 ends: [A6+3B2]."""
    return _graph(6, [(0, 1, 2)], [(0, 3), (1, 4), (2, 5)], {3: "B2", 4: "B2", 5: "B2"})


@pytest.fixture
def loop_a():
    """A trivalent vertex carrying a loop and an A2 end: [A6+A2]."""
    return _graph(4, [(0, 1, 2)], [(0, 1), (2, 3)], {3: "A2"})


@pytest.fixture
def loop_b():
    """A trivalent vertex carrying a loop and a B2 end: [A6+B2]."""
    return _graph(4, [(0, 1, 2)], [(0, 1), (2, 3)], {3: "B2"})
