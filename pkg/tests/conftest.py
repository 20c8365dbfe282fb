import pytest

from gridlc import Graph


@pytest.fixture
def diamond() -> Graph:
    """K_4 minus one edge: 4 vertices, 5 edges."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
