"""
Constructive sampler of lower-optimal signed graphs.

Starts from a disjoint union of cycles whose length and sign satisfy the
residue condition, then repeatedly adds a pendant pair v--u, joining v to at
most one vertex of each of a random set of existing components so that v lies
on no cycle. Each step preserves lower-optimality.
"""

import logging
from typing import Any, Dict, List, Mapping, NamedTuple, Tuple

import numpy as np

from ..core.graph import (
    Sign,
    SignedGraph,
    add_vertex,
    components,
    cycle,
    disjoint_union,
    empty_graph,
)
from ..exceptions import GraphInputError
from ..utils.logging import get_logger


class BuildRecipe(NamedTuple):
    """
    Deterministic description of one generated graph.

    Attributes:
        seed: Seed for numpy's default generator
        cycle_specs: Cycle lengths, each even and at least 4
        expansion_steps: Number of pendant-pair expansions
        isolated_vertices: Isolated vertices added to the base
        attach_probability: Chance that v is joined to a given component
    """

    seed: int = 0
    cycle_specs: Tuple[int, ...] = ()
    expansion_steps: int = 0
    isolated_vertices: int = 0
    attach_probability: float = 0.5

    def validate(self) -> "BuildRecipe":
        """
        Raises:
            GraphInputError: on an odd or too short cycle length, or a negative
                count, seed or out-of-range probability
        """
        for q in self.cycle_specs:
            if not isinstance(q, int) or q < 4 or q % 2:
                raise GraphInputError(
                    f"cycle length {q} invalid: lengths must be even and at least 4"
                )
        for name in ("seed", "expansion_steps", "isolated_vertices"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise GraphInputError(f"{name} must be a non-negative integer, got {value!r}")
        if not 0.0 <= self.attach_probability <= 1.0:
            raise GraphInputError(
                f"attach_probability must lie in [0, 1], got {self.attach_probability}"
            )
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "cycle_specs": list(self.cycle_specs),
            "expansion_steps": self.expansion_steps,
            "isolated_vertices": self.isolated_vertices,
            "attach_probability": self.attach_probability,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "BuildRecipe":
        unknown = set(data) - set(cls._fields)
        if unknown:
            raise GraphInputError(f"unknown recipe field(s): {sorted(unknown)}")
        try:
            recipe = cls(
                seed=data.get("seed", 0),
                cycle_specs=tuple(data.get("cycle_specs", ())),
                expansion_steps=data.get("expansion_steps", 0),
                isolated_vertices=data.get("isolated_vertices", 0),
                attach_probability=float(data.get("attach_probability", 0.5)),
            )
        except (TypeError, ValueError) as e:
            raise GraphInputError(f"malformed recipe: {e}") from e
        return recipe.validate()


def signed_base_cycle(q: int) -> SignedGraph:
    """C_q, all Plus except one Minus edge at (0, 1) when q = 2 (mod 4)."""
    signs = [Sign.PLUS] * q
    if q % 4 == 2:
        signs[0] = Sign.MINUS
    return cycle(q, signs)


def base_components(recipe: BuildRecipe) -> SignedGraph:
    """Disjoint union of the recipe's cycles followed by its isolated vertices."""
    recipe.validate()
    parts = [signed_base_cycle(q) for q in recipe.cycle_specs]
    parts.append(empty_graph(recipe.isolated_vertices))
    return disjoint_union(*parts)


def _random_sign(rng: np.random.Generator) -> Sign:
    return Sign.MINUS if rng.integers(0, 2) else Sign.PLUS


def expand_pendant_pair(
    g: SignedGraph, rng: np.random.Generator, attach_probability: float = 0.5
) -> SignedGraph:
    """
    Add vertices v = g.n and u = g.n + 1 with the edge v--u.

    v is joined to one random vertex of each component selected with
    probability ``attach_probability``; signs of new edges are random.
    """
    attachments: List[Tuple[int, Sign]] = []
    for part in components(g):
        if rng.random() < attach_probability:
            x = part.vertex_map[int(rng.integers(0, len(part.vertex_map)))]
            attachments.append((x, _random_sign(rng)))
    with_v = add_vertex(g, attachments)
    return add_vertex(with_v, [(g.n, _random_sign(rng))])


def generate(recipe: BuildRecipe, loglevel: int = logging.WARNING) -> SignedGraph:
    """Base cycles and isolated vertices, then the recipe's expansion steps."""
    logger = get_logger(__name__, loglevel)
    g = base_components(recipe)
    rng = np.random.default_rng(recipe.seed)
    for _ in range(recipe.expansion_steps):
        g = expand_pendant_pair(g, rng, recipe.attach_probability)
    logger.debug(
        f"Generated n={g.n}, |E|={g.edge_count} from seed {recipe.seed}",
        extra={"seed": recipe.seed, "n": g.n},
    )
    return g


def generate_corpus(
    recipe: BuildRecipe, count: int, loglevel: int = logging.WARNING
) -> List[Tuple[BuildRecipe, SignedGraph]]:
    """``count`` graphs from seeds recipe.seed .. recipe.seed + count - 1."""
    if count < 0:
        raise GraphInputError(f"count must be non-negative, got {count}")
    recipe.validate()
    corpus = []
    for k in range(count):
        member = recipe._replace(seed=recipe.seed + k)
        corpus.append((member, generate(member, loglevel)))
    return corpus
