import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedtools.analysis.generator import (
    BuildRecipe,
    base_components,
    expand_pendant_pair,
    generate,
    generate_corpus,
    signed_base_cycle,
)
from signedtools.analysis.lemmas import FAIL, corollary_suite
from signedtools.analysis.theorems import evaluate, is_lower_optimal_direct
from signedtools.core.cycles import cycle_vertices, cycles_vertex_disjoint
from signedtools.core.graph import (
    Sign,
    component_count,
    cycle,
    delete_vertices,
    pendant_vertices,
)
from signedtools.exceptions import GraphInputError
from signedtools.io.edgelist import format_edge_list

recipes = st.builds(
    BuildRecipe,
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    cycle_specs=st.lists(st.sampled_from([4, 6, 8, 10]), max_size=3).map(tuple),
    expansion_steps=st.integers(min_value=0, max_value=5),
    isolated_vertices=st.integers(min_value=0, max_value=2),
    attach_probability=st.sampled_from([0.0, 0.5, 1.0]),
)


@pytest.mark.parametrize("q, negatives", [(4, ()), (6, ((0, 1),)), (8, ()), (10, ((0, 1),))])
def test_signed_base_cycle(q, negatives):
    g = signed_base_cycle(q)
    assert g.n == q
    assert g.negative_edges() == negatives


@pytest.mark.parametrize(
    "recipe",
    [
        BuildRecipe(cycle_specs=(5,)),
        BuildRecipe(cycle_specs=(2,)),
        BuildRecipe(cycle_specs=(4, 7)),
        BuildRecipe(expansion_steps=-1),
        BuildRecipe(isolated_vertices=-3),
        BuildRecipe(seed=-1),
        BuildRecipe(attach_probability=1.5),
    ],
)
def test_invalid_recipes_are_rejected(recipe):
    with pytest.raises(GraphInputError):
        recipe.validate()
    with pytest.raises(GraphInputError):
        generate(recipe)


def test_recipe_dict_form():
    recipe = BuildRecipe(seed=7, cycle_specs=(4, 6), expansion_steps=2, isolated_vertices=1)
    data = recipe.to_dict()
    assert data["cycle_specs"] == [4, 6]
    assert BuildRecipe.from_dict(data) == recipe
    assert BuildRecipe.from_dict({}) == BuildRecipe()
    with pytest.raises(GraphInputError):
        BuildRecipe.from_dict({"cycles": [4]})
    with pytest.raises(GraphInputError):
        BuildRecipe.from_dict({"cycle_specs": [3]})


def test_base_components():
    g = base_components(BuildRecipe(cycle_specs=(4, 6), isolated_vertices=2))
    assert g.n == 12
    assert component_count(g) == 4
    assert g.negative_edges() == ((4, 5),)


def test_six_cycle_has_a_single_minus_edge():
    text = format_edge_list(generate(BuildRecipe(cycle_specs=(6,))))
    assert sum(1 for line in text.splitlines() if line.endswith(" -")) == 1


def test_expand_pendant_pair_adds_a_pendant():
    rng = np.random.default_rng(0)
    g = expand_pendant_pair(cycle(4), rng, attach_probability=1.0)
    assert g.n == 6
    assert g.has_edge(4, 5)
    assert 5 in pendant_vertices(g)
    assert len([w for w in g.neighbors(4) if w < 4]) == 1


def test_expand_without_attachment_leaves_an_edge_component():
    rng = np.random.default_rng(0)
    g = expand_pendant_pair(cycle(4), rng, attach_probability=0.0)
    assert g.edges[-1] == (4, 5)
    assert component_count(g) == 2


def test_generate_is_deterministic():
    recipe = BuildRecipe(seed=11, cycle_specs=(4, 4), expansion_steps=4)
    assert generate(recipe) == generate(recipe)


def test_generate_corpus_uses_consecutive_seeds():
    corpus = generate_corpus(BuildRecipe(seed=5, cycle_specs=(4,), expansion_steps=1), 3)
    assert [member.seed for member, _ in corpus] == [5, 6, 7]
    assert all(g.n == 6 for _, g in corpus)
    assert generate_corpus(BuildRecipe(), 0) == []
    with pytest.raises(GraphInputError):
        generate_corpus(BuildRecipe(), -1)


@given(recipes)
@settings(max_examples=60, deadline=None)
def test_generated_graphs_are_lower_optimal(recipe):
    g = generate(recipe)
    n = sum(recipe.cycle_specs) + recipe.isolated_vertices + 2 * recipe.expansion_steps
    assert g.n == n

    report = evaluate(g)
    assert report.lower_optimal_direct
    assert report.lower_optimal_structural
    witness = report.structural_witness
    assert witness.alpha_t_g == witness.alpha_t_g_bracket + report.c
    assert len(cycles_vertex_disjoint(g).cycles) == len(recipe.cycle_specs)


@given(recipes.filter(lambda r: r.cycle_specs))
@settings(max_examples=20, deadline=None)
def test_deleting_a_cycle_vertex_keeps_lower_optimality(recipe):
    results = corollary_suite(generate(recipe))
    assert all(res.status != FAIL for res in results)


def test_cycle_signs_follow_the_residue_rule():
    g = generate(BuildRecipe(cycle_specs=(4, 6, 8, 10)))
    report = evaluate(g)
    signs = {v.length: v.sign for v in report.structural_witness.cycles}
    assert signs == {4: Sign.PLUS, 6: Sign.MINUS, 8: Sign.PLUS, 10: Sign.MINUS}


def _seeded_recipe(rng: np.random.Generator, seed: int) -> BuildRecipe:
    specs = rng.choice([4, 6, 8], size=int(rng.integers(0, 3)))
    return BuildRecipe(
        seed=seed,
        cycle_specs=tuple(int(q) for q in specs),
        expansion_steps=int(rng.integers(0, 5)),
        isolated_vertices=int(rng.integers(0, 3)),
        attach_probability=float(rng.choice([0.0, 0.25, 0.5, 1.0])),
    )


@pytest.mark.slow
def test_thousand_seeded_recipes_are_sound():
    rng = np.random.default_rng(1000)
    for seed in range(1000):
        recipe = _seeded_recipe(rng, seed)
        g = generate(recipe)
        report = evaluate(g)
        assert report.lower_optimal_direct, recipe
        assert report.lower_optimal_structural, recipe
        witness = report.structural_witness
        assert witness.alpha_t_g == witness.alpha_t_g_bracket + report.c
        for u in cycle_vertices(g):
            assert is_lower_optimal_direct(delete_vertices(g, [u]).graph), (recipe, u)
