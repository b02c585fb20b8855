import networkx as nx
import pytest
from hypothesis import given, settings

from signedtools.core.graph import complete, cycle, empty_graph, path, petersen, star
from signedtools.core.invariants import (
    brute_force_independence_number,
    cyclomatic_number,
    independence_number,
    invariant_bundle,
    is_forest,
    is_independent_set,
    matching_number,
)

from .strategies import signed_graphs


def _to_networkx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize(
    "g, alpha, mu, c",
    [
        (empty_graph(0), 0, 0, 0),
        (empty_graph(3), 3, 0, 0),
        (path(4), 2, 2, 0),
        (star(6), 5, 1, 0),
        (cycle(5), 2, 2, 1),
        (cycle(6), 3, 3, 1),
        (complete(5), 1, 2, 6),
        (petersen(), 4, 5, 6),
    ],
    ids=["empty-0", "empty-3", "P4", "S6", "C5", "C6", "K5", "petersen"],
)
def test_known_invariants(g, alpha, mu, c):
    assert independence_number(g)[0] == alpha
    assert matching_number(g) == mu
    assert cyclomatic_number(g) == c


def test_running_example_invariants(running_example):
    bundle = invariant_bundle(running_example)
    assert (bundle.alpha, bundle.mu, bundle.c, bundle.omega) == (3, 3, 1, 1)


def test_forest():
    assert is_forest(path(5))
    assert is_forest(empty_graph(2))
    assert not is_forest(cycle(3))


@given(signed_graphs(max_n=9))
@settings(max_examples=80, deadline=None)
def test_independence_witness_is_maximum(g):
    alpha, witness = independence_number(g)
    assert len(witness) == alpha
    assert list(witness) == sorted(set(witness))
    assert is_independent_set(g, witness)
    assert alpha == brute_force_independence_number(g)


@given(signed_graphs(max_n=9))
@settings(max_examples=80, deadline=None)
def test_matching_number_matches_networkx(g):
    expected = len(nx.max_weight_matching(_to_networkx(g), maxcardinality=True))
    assert matching_number(g) == expected


@given(signed_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_cyclomatic_number_matches_cycle_basis(g):
    assert cyclomatic_number(g) == len(nx.cycle_basis(_to_networkx(g)))
