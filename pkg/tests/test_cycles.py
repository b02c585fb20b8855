import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedtools.core.cycles import (
    blocks,
    contract,
    cycle_multiplicity,
    cycle_sign,
    cycle_signature,
    cycle_vertices,
    cyclomatic_drop,
    cycles_vertex_disjoint,
    normalize_signs,
    pendant_cycles,
    spanning_forest_edges,
    switch,
)
from signedtools.core.graph import (
    Sign,
    SignedGraph,
    complete,
    cycle,
    delete_edges,
    delete_vertices,
    path,
)
from signedtools.core.invariants import cyclomatic_number
from signedtools.exceptions import PreconditionError

from .strategies import signed_graphs


def test_blocks_of_running_example(running_example):
    found = blocks(running_example)
    assert [b.edges for b in found] == [
        ((0, 1), (0, 3), (1, 2), (2, 3)),
        ((0, 4),),
        ((4, 5),),
    ]
    assert found[0].is_cycle
    assert found[1].is_bridge
    assert not found[1].is_cycle


@given(signed_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_blocks_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    expected = sorted(
        tuple(sorted((min(u, v), max(u, v)) for u, v in part))
        for part in nx.biconnected_component_edges(h)
    )
    assert sorted(b.edges for b in blocks(g)) == expected


def test_disjoint_cycles(running_example):
    verdict = cycles_vertex_disjoint(running_example)
    assert verdict.disjoint
    assert verdict.cycles == ((0, 1, 2, 3),)
    assert verdict.witness_kind is None


def test_shared_vertex_witness(bowtie):
    verdict = cycles_vertex_disjoint(bowtie)
    assert not verdict.disjoint
    assert verdict.witness_kind == "shared_vertex"
    assert verdict.witness == (2,)


def test_non_cycle_block_witness():
    verdict = cycles_vertex_disjoint(complete(4))
    assert not verdict.disjoint
    assert verdict.witness_kind == "non_cycle_block"
    assert verdict.witness == (0, 1, 2, 3)


def test_forest_has_no_cycles():
    verdict = cycles_vertex_disjoint(path(5))
    assert verdict.disjoint
    assert verdict.cycles == ()


@given(signed_graphs(max_n=8))
@settings(max_examples=80, deadline=None)
def test_disjoint_cycles_are_counted_by_cyclomatic_number(g):
    verdict = cycles_vertex_disjoint(g)
    if verdict.disjoint:
        assert len(verdict.cycles) == cyclomatic_number(g)
        used = [v for cyc in verdict.cycles for v in cyc]
        assert len(used) == len(set(used))
        for cyc in verdict.cycles:
            assert cyc[0] == min(cyc)
            cycle_sign(g, cyc)
    else:
        assert cyclomatic_number(g) >= 2


def test_cycle_sign(running_example):
    assert cycle_sign(running_example, (0, 1, 2, 3)) is Sign.PLUS
    flipped = running_example.with_signs({(0, 1): Sign.MINUS})
    assert cycle_sign(flipped, (3, 2, 1, 0)) is Sign.MINUS
    with pytest.raises(PreconditionError):
        cycle_sign(running_example, (0, 1, 2))
    with pytest.raises(PreconditionError):
        cycle_sign(running_example, (0, 1))


def test_contraction_of_running_example(running_example):
    structure = contract(running_example)
    assert structure.cycles == ((0, 1, 2, 3),)
    assert structure.signs == (Sign.PLUS,)
    assert structure.contraction_map == (0, 0, 0, 0, 1, 2)
    assert structure.cyclic_vertices == (0,)
    assert structure.t_g == path(3)
    assert structure.t_g_bracket == path(2)


def test_contraction_of_two_cycles_joined_by_a_path():
    # C_4 on 0..3, C_4 on 5..8, bridge path 3-4-5
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (5, 8)]
    structure = contract(SignedGraph.from_edges(9, edges))
    assert structure.contraction_map == (0, 0, 0, 0, 1, 2, 2, 2, 2)
    assert structure.cyclic_vertices == (0, 2)
    assert structure.t_g == path(3)
    assert structure.t_g_bracket.n == 1
    assert structure.t_g_bracket.edge_count == 0


def test_contract_rejects_intersecting_cycles(bowtie):
    with pytest.raises(PreconditionError):
        contract(bowtie)


def test_cycle_multiplicity(bowtie, running_example):
    assert cycle_multiplicity(bowtie, 2) == 2
    assert cycle_multiplicity(bowtie, 0) == 1
    assert cycle_multiplicity(running_example, 4) == 0
    assert cycle_multiplicity(complete(4), 0) == 2


def test_cyclomatic_drop_uses_block_degree(bowtie, running_example):
    k4_minus_edge = delete_edges(complete(4), [(2, 3)])
    # 2 and 3 have degree 2 in the theta block; 0 and 1 have degree 3
    assert [cyclomatic_drop(k4_minus_edge, x) for x in range(4)] == [2, 2, 1, 1]
    assert cyclomatic_drop(bowtie, 2) == 2
    assert cyclomatic_drop(bowtie, 0) == 1
    assert cyclomatic_drop(running_example, 0) == 1
    assert cyclomatic_drop(running_example, 4) == 0
    assert cyclomatic_drop(SignedGraph(1), 0) == 0


@given(signed_graphs(max_n=8), st.data())
@settings(max_examples=80, deadline=None)
def test_cyclomatic_drop_matches_deletion(g, data):
    if g.n == 0:
        return
    x = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    reduced = cyclomatic_number(delete_vertices(g, [x]).graph)
    assert cyclomatic_number(g) - reduced == cyclomatic_drop(g, x)


def test_cycle_vertices(running_example):
    assert cycle_vertices(running_example) == (0, 1, 2, 3)
    assert cycle_vertices(path(3)) == ()


def test_pendant_cycles(c4_pendant):
    assert pendant_cycles(c4_pendant) == [((0, 1, 2, 3), 0)]
    assert pendant_cycles(cycle(5)) == []


def test_switch_negates_cut_edges():
    g = switch(cycle(4), [0])
    assert g.negative_edges() == ((0, 1), (0, 3))
    assert cycle_sign(g, (0, 1, 2, 3)) is Sign.PLUS


def test_spanning_forest_edges():
    assert spanning_forest_edges(cycle(4)) == ((0, 1), (1, 2), (2, 3))


@given(signed_graphs(max_n=8), st.data())
@settings(max_examples=60, deadline=None)
def test_normalize_signs_is_a_class_invariant(g, data):
    switched = data.draw(st.sets(st.integers(min_value=0, max_value=max(g.n - 1, 0))))
    switched = {v for v in switched if v < g.n}
    normal = normalize_signs(g)
    assert all(normal.sign(u, v) is Sign.PLUS for u, v in spanning_forest_edges(g))
    assert normalize_signs(switch(g, switched)) == normal


def test_cycle_signature(c4_one_minus, bowtie):
    assert cycle_signature(c4_one_minus) == [(4, 0, "-")]
    with pytest.raises(PreconditionError):
        cycle_signature(bowtie)
