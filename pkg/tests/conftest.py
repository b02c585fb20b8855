"""Shared signed graphs for the test suite."""

import pytest

from signedtools.core.graph import Sign, SignedGraph, cycle


@pytest.fixture
def running_example() -> SignedGraph:
    """All-Plus C_4 on 0..3 with the path 0-4-5 hanging off vertex 0."""
    return SignedGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)])


@pytest.fixture
def c4_pendant() -> SignedGraph:
    """All-Plus C_4 with one pendant vertex 4 on vertex 0."""
    return SignedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])


@pytest.fixture
def c4_one_minus() -> SignedGraph:
    return cycle(4, [Sign.MINUS, Sign.PLUS, Sign.PLUS, Sign.PLUS])


@pytest.fixture
def bowtie() -> SignedGraph:
    """Two triangles sharing vertex 2."""
    return SignedGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
