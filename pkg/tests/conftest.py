import pytest

from kempecolor import Graph, odd_graph

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),          # outer cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),          # inner pentagram
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),          # spokes
]


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def k4():
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def petersen():
    return odd_graph(3)


@pytest.fixture
def petersen_standard():
    return Graph(10, PETERSEN_EDGES)
