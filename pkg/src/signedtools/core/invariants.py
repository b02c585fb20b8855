"""
Exact combinatorial invariants of the underlying graph.

Independence number, matching number and cyclomatic number. Signs are
ignored by every function here. Vertex subsets are handled as integer
bitmasks.
"""

from functools import lru_cache
from typing import Iterable, NamedTuple, Tuple

from .graph import SignedGraph, VertexSet, component_count


class InvariantBundle(NamedTuple):
    """Invariants of a signed graph that only depend on its underlying graph."""

    n: int
    edge_count: int
    alpha: int
    mu: int
    c: int
    omega: int


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _clique_cover_bound(candidates: int, masks: Tuple[int, ...]) -> int:
    """Greedy clique cover size; an upper bound on alpha of the candidates."""
    cliques = []
    for v in _bits(candidates):
        for index, members in enumerate(cliques):
            if members & masks[v] == members:
                cliques[index] = members | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def independence_number(g: SignedGraph) -> Tuple[int, VertexSet]:
    """
    Exact independence number with a maximum independent set as witness.

    Branch and bound: isolated and pendant vertices are taken greedily (some
    maximum independent set always contains them), then the search branches on
    a maximum-degree vertex, lowest id first on ties, and prunes with a greedy
    clique cover bound.

    Returns:
        (alpha, witness) with witness a sorted tuple of pairwise non-adjacent
        vertices of size alpha
    """
    masks = g.adjacency_masks()
    best_size = -1
    best_set = 0

    def search(candidates: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set

        # Reductions
        changed = True
        while changed and candidates:
            changed = False
            for v in _bits(candidates):
                local = masks[v] & candidates
                if local == 0 or local & (local - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    candidates &= ~((1 << v) | local)
                    changed = True
                    break

        if not candidates:
            if size > best_size:
                best_size, best_set = size, chosen
            return

        if size + _clique_cover_bound(candidates, masks) <= best_size:
            return

        pivot, pivot_degree = -1, -1
        for v in _bits(candidates):
            d = _popcount(masks[v] & candidates)
            if d > pivot_degree:
                pivot, pivot_degree = v, d

        search(candidates & ~((1 << pivot) | masks[pivot]), chosen | (1 << pivot), size + 1)
        search(candidates & ~(1 << pivot), chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return best_size, tuple(_bits(best_set))


def matching_number(g: SignedGraph) -> int:
    """
    Exact matching number by memoized branching on the remaining vertex set.

    Isolated vertices are dropped and pendant edges are matched greedily; the
    lowest remaining vertex is then either left unmatched or matched to one of
    its neighbours.
    """
    masks = g.adjacency_masks()

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        matched = 0
        changed = True
        while changed and remaining:
            changed = False
            for v in _bits(remaining):
                local = masks[v] & remaining
                if local == 0:
                    remaining &= ~(1 << v)
                    changed = True
                    break
                if local & (local - 1) == 0:
                    remaining &= ~((1 << v) | local)
                    matched += 1
                    changed = True
                    break
        if not remaining:
            return matched

        v = (remaining & -remaining).bit_length() - 1
        result = best(remaining & ~(1 << v))
        ceiling = _popcount(remaining) // 2
        for w in _bits(masks[v] & remaining):
            if result == ceiling:
                break
            result = max(result, 1 + best(remaining & ~((1 << v) | (1 << w))))
        return matched + result

    return best((1 << g.n) - 1)


def cyclomatic_number(g: SignedGraph) -> int:
    """c(G) = |E| - n + omega."""
    return g.edge_count - g.n + component_count(g)


def is_forest(g: SignedGraph) -> bool:
    return cyclomatic_number(g) == 0


def is_independent_set(g: SignedGraph, xs: Iterable[int]) -> bool:
    members = set(xs)
    return all(not (u in members and v in members) for u, v in g.edges)


def invariant_bundle(g: SignedGraph) -> InvariantBundle:
    alpha, _ = independence_number(g)
    return InvariantBundle(
        n=g.n,
        edge_count=g.edge_count,
        alpha=alpha,
        mu=matching_number(g),
        c=cyclomatic_number(g),
        omega=component_count(g),
    )


def brute_force_independence_number(g: SignedGraph) -> int:
    """Maximum over all 2^n subsets; for oracle use on small graphs."""
    masks = g.adjacency_masks()
    best = 0
    for subset in range(1 << g.n):
        if all(masks[v] & subset == 0 for v in _bits(subset)):
            best = max(best, _popcount(subset))
    return best
