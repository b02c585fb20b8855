"""
Property checks for the rank, independence and cyclomatic lemmas.

Each check instantiates one lemma on a concrete signed graph, over every valid
choice of its parameters (or a seeded sample of them when the choices are too
many), and reports pass, fail or skipped. A check whose hypothesis does not
hold on the graph is reported as skipped, never as a vacuous pass.
"""

import logging
from itertools import combinations
from typing import Callable, Iterable, List, NamedTuple, Optional, Tuple

import numpy as np

from ..core.cycles import (
    cycle_multiplicity,
    cycle_vertices,
    cyclomatic_drop,
    pendant_cycles,
)
from ..core.graph import (
    Sign,
    SignedGraph,
    components,
    delete_edges,
    delete_vertices,
    induced_subgraph,
    is_connected,
    pendant_vertices,
    quasi_pendant_vertices,
)
from ..core.invariants import (
    cyclomatic_number,
    independence_number,
    is_forest,
    matching_number,
)
from ..core.linalg import adjacency_matrix, rank_exact, signed_rank
from ..utils.logging import get_logger
from .theorems import bound_check, cycle_condition_holds, evaluate

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

EXHAUSTIVE_SUBSET_ORDER = 8
EXHAUSTIVE_TREE_ORDER = 10


class CheckResult(NamedTuple):
    check_id: str
    status: str
    witness: Tuple[int, ...] = ()
    detail: str = ""


Failure = Optional[Tuple[Tuple[int, ...], str]]


def _first_failure(
    cases: Iterable[Tuple[int, ...]], examine: Callable[[Tuple[int, ...]], Optional[str]]
) -> Tuple[int, Failure]:
    """Run examine on each case; stop at the first one returning a message."""
    checked = 0
    for case in cases:
        checked += 1
        message = examine(case)
        if message is not None:
            return checked, (case, message)
    return checked, None


def _verdict(check_id: str, checked: int, failure: Failure) -> CheckResult:
    if failure is not None:
        return CheckResult(check_id, FAIL, failure[0], failure[1])
    return CheckResult(check_id, PASS, (), f"{checked} instance(s)")


def _skipped(check_id: str, reason: str) -> CheckResult:
    return CheckResult(check_id, SKIPPED, (), reason)


def _alpha(g: SignedGraph) -> int:
    return independence_number(g)[0]


def _without(g: SignedGraph, *xs: int) -> SignedGraph:
    return delete_vertices(g, xs).graph


def _is_bipartite(g: SignedGraph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _is_single_cycle(g: SignedGraph) -> bool:
    return g.n >= 3 and is_connected(g) and all(len(g.neighbors(v)) == 2 for v in range(g.n))


def _cycle_rank_table(n: int, negative: bool) -> int:
    """Rank of a signed n-cycle from its length and sign."""
    if n % 2 == 1:
        return n
    if (n % 4 == 0 and not negative) or (n % 4 == 2 and negative):
        return n - 2
    return n


# Rank lemmas


def check_induced_monotonicity(
    g: SignedGraph, r: int, rng: np.random.Generator, sample_size: int
) -> CheckResult:
    """r(H) <= r(G) for induced subgraphs H."""
    if g.n <= EXHAUSTIVE_SUBSET_ORDER:
        subsets = (
            tuple(v for v in range(g.n) if mask >> v & 1) for mask in range(1, (1 << g.n) - 1)
        )
    else:
        draws = rng.integers(0, 2, size=(sample_size, g.n))
        subsets = (tuple(int(v) for v in np.flatnonzero(row)) for row in draws)

    def examine(keep):
        sub = induced_subgraph(g, keep).graph
        r_sub = signed_rank(sub)
        return None if r_sub <= r else f"r(H)={r_sub} > r(G)={r}"

    return _verdict("rank.induced_monotonicity", *_first_failure(subsets, examine))


def check_component_additivity(g: SignedGraph, r: int) -> CheckResult:
    parts = [signed_rank(part.graph) for part in components(g)]
    if sum(parts) != r:
        return CheckResult(
            "rank.component_additivity", FAIL, (), f"sum {sum(parts)} != r(G)={r}"
        )
    return CheckResult("rank.component_additivity", PASS, (), f"{len(parts)} component(s)")


def check_rank_zero(g: SignedGraph, r: int) -> CheckResult:
    if (r == 0) != (g.edge_count == 0):
        return CheckResult("rank.zero_iff_edgeless", FAIL, (), f"r={r}, |E|={g.edge_count}")
    return CheckResult("rank.zero_iff_edgeless", PASS)


def check_pendant_pair_rank(g: SignedGraph, r: int) -> CheckResult:
    """r(G) = r(G - {x, y}) + 2 for a pendant y with neighbour x."""
    pendant = pendant_vertices(g)
    if not pendant:
        return _skipped("rank.pendant_pair", "no pendant vertex")
    pairs = ((g.neighbors(y)[0], y) for y in pendant)

    def examine(pair):
        reduced = signed_rank(_without(g, *pair))
        return None if reduced + 2 == r else f"r(G-{{x,y}})={reduced}, r(G)={r}"

    return _verdict("rank.pendant_pair", *_first_failure(pairs, examine))


def check_vertex_deletion_rank(g: SignedGraph, r: int) -> CheckResult:
    """r(G) - 2 <= r(G - x) <= r(G)."""
    if g.n == 0:
        return _skipped("rank.vertex_deletion", "empty vertex set")

    def examine(case):
        reduced = signed_rank(_without(g, case[0]))
        return None if r - 2 <= reduced <= r else f"r(G-x)={reduced}, r(G)={r}"

    return _verdict("rank.vertex_deletion", *_first_failure(((x,) for x in range(g.n)), examine))


def check_cycle_rank_table(g: SignedGraph, r: int) -> CheckResult:
    if not _is_single_cycle(g):
        return _skipped("rank.cycle_table", "not a cycle")
    negative = len(g.negative_edges()) % 2 == 1
    expected = _cycle_rank_table(g.n, negative)
    if r != expected:
        return CheckResult("rank.cycle_table", FAIL, (), f"r={r}, table gives {expected}")
    return CheckResult("rank.cycle_table", PASS)


def check_upper_certificate(g: SignedGraph, r: int, alpha: int, witness) -> CheckResult:
    """r <= r([0 B]) + r([B^T A]) <= 2n - 2*alpha with I a maximum independent set."""
    outside = [v for v in range(g.n) if v not in set(witness)]
    m = adjacency_matrix(g).permuted(list(witness) + outside)
    top = rank_exact(m.submatrix(range(alpha), range(g.n)))
    bottom = rank_exact(m.submatrix(range(alpha, g.n), range(g.n)))
    if not r <= top + bottom <= 2 * g.n - 2 * alpha:
        return CheckResult(
            "bound.upper_certificate",
            FAIL,
            tuple(witness),
            f"r={r}, blocks {top}+{bottom}, 2n-2alpha={2 * g.n - 2 * alpha}",
        )
    return CheckResult("bound.upper_certificate", PASS, tuple(witness), f"{top}+{bottom}")


# Forest and bipartite identities


def check_forest_rank(g: SignedGraph, r: int, mu: int) -> CheckResult:
    if not is_forest(g):
        return _skipped("rank.forest_matching", "graph has a cycle")
    if r != 2 * mu:
        return CheckResult("rank.forest_matching", FAIL, (), f"r={r}, 2m={2 * mu}")
    return CheckResult("rank.forest_matching", PASS)


def check_bipartite_gallai(g: SignedGraph, alpha: int, mu: int) -> CheckResult:
    if not _is_bipartite(g):
        return _skipped("alpha.bipartite_matching", "graph is not bipartite")
    if alpha + mu != g.n:
        return CheckResult("alpha.bipartite_matching", FAIL, (), f"alpha+m={alpha + mu}, n={g.n}")
    return CheckResult("alpha.bipartite_matching", PASS)


def check_forest_bound(g: SignedGraph, r: int, alpha: int) -> CheckResult:
    if not is_forest(g):
        return _skipped("bound.forest_upper", "graph has a cycle")
    if r + 2 * alpha != 2 * g.n:
        return CheckResult("bound.forest_upper", FAIL, (), f"r+2alpha={r + 2 * alpha}")
    return CheckResult("bound.forest_upper", PASS)


def check_cycle_lower_optimal(g: SignedGraph, lower_optimal: bool) -> CheckResult:
    if not _is_single_cycle(g):
        return _skipped("cycle.lower_optimal", "not a cycle")
    negative = len(g.negative_edges()) % 2 == 1
    expected = cycle_condition_holds(g.n, Sign.MINUS if negative else Sign.PLUS)
    if expected != lower_optimal:
        return CheckResult(
            "cycle.lower_optimal", FAIL, (), f"lower-optimal={lower_optimal}, expected {expected}"
        )
    return CheckResult("cycle.lower_optimal", PASS)


# Independence and cyclomatic lemmas


def check_vertex_deletion_alpha(g: SignedGraph, alpha: int) -> CheckResult:
    if g.n == 0:
        return _skipped("alpha.vertex_deletion", "empty vertex set")

    def examine(case):
        reduced = _alpha(_without(g, case[0]))
        return None if alpha - 1 <= reduced <= alpha else f"alpha(G-x)={reduced}"

    return _verdict("alpha.vertex_deletion", *_first_failure(((x,) for x in range(g.n)), examine))


def check_edge_deletion_alpha(g: SignedGraph, alpha: int) -> CheckResult:
    if not g.edge_count:
        return _skipped("alpha.edge_deletion", "no edges")

    def examine(edge):
        reduced = _alpha(delete_edges(g, [edge]))
        return None if reduced >= alpha else f"alpha(G-e)={reduced} < {alpha}"

    return _verdict("alpha.edge_deletion", *_first_failure(g.edges, examine))


def check_pendant_alpha(g: SignedGraph, alpha: int) -> CheckResult:
    """alpha(G) = alpha(G - x) = alpha(G - {x, y}) + 1 for pendant y, neighbour x."""
    pendant = pendant_vertices(g)
    if not pendant:
        return _skipped("alpha.pendant_reduction", "no pendant vertex")

    def examine(pair):
        x, y = pair
        a_x = _alpha(_without(g, x))
        a_xy = _alpha(_without(g, x, y))
        if alpha == a_x == a_xy + 1:
            return None
        return f"alpha={alpha}, alpha(G-x)={a_x}, alpha(G-{{x,y}})={a_xy}"

    pairs = ((g.neighbors(y)[0], y) for y in pendant)
    return _verdict("alpha.pendant_reduction", *_first_failure(pairs, examine))


def check_cyclomatic_deletion(g: SignedGraph, c: int) -> CheckResult:
    """
    Deleting x keeps c off cycles and drops it by at least 1 on a cycle.

    The drop is at least 2 when x has degree 3 or more in one block or lies
    in two cyclic blocks. A degree-2 vertex of a theta block lies on several
    cycles yet drops c by exactly 1, so the block-local degree decides.
    """
    if g.n == 0:
        return _skipped("cyclomatic.vertex_deletion", "empty vertex set")

    def examine(case):
        x = case[0]
        reduced = cyclomatic_number(_without(g, x))
        on_cycle = cycle_multiplicity(g, x) > 0
        drop = cyclomatic_drop(g, x)
        if not on_cycle and reduced != c:
            return f"x on no cycle but c(G-x)={reduced} != {c}"
        if on_cycle and reduced > c - 1:
            return f"x on a cycle but c(G-x)={reduced}, c={c}"
        if reduced != c - drop:
            return f"c(G-x)={reduced} but block degrees give {c - drop}"
        return None

    return _verdict(
        "cyclomatic.vertex_deletion", *_first_failure(((x,) for x in range(g.n)), examine)
    )


def _trees(g: SignedGraph) -> List[SignedGraph]:
    return [
        part.graph for part in components(g) if part.graph.edge_count and is_forest(part.graph)
    ]


def check_pendant_subtree_bound(g: SignedGraph) -> CheckResult:
    """alpha(T) <= alpha(T_0) + p(T) with T_0 = T minus its pendant vertices."""
    trees = _trees(g)
    if not trees:
        return _skipped("tree.pendant_subtree_bound", "no tree component with an edge")
    for tree in trees:
        pendant = pendant_vertices(tree)
        core = _alpha(_without(tree, *pendant))
        a = _alpha(tree)
        if a > core + len(pendant):
            return CheckResult(
                "tree.pendant_subtree_bound",
                FAIL,
                pendant,
                f"alpha(T)={a} > alpha(T_0)+p={core + len(pendant)}",
            )
    return CheckResult("tree.pendant_subtree_bound", PASS, (), f"{len(trees)} tree(s)")


def check_pendant_outside_deletion(g: SignedGraph) -> CheckResult:
    """If alpha(T) = alpha(T - D) + |D| then some pendant vertex lies outside D."""
    trees = [t for t in _trees(g) if t.n <= EXHAUSTIVE_TREE_ORDER]
    if not trees:
        return _skipped("tree.pendant_outside_deletion", "no small tree component")
    checked = 0
    for tree in trees:
        a = _alpha(tree)
        pendant = set(pendant_vertices(tree))
        for size in range(1, tree.n + 1):
            for removed in combinations(range(tree.n), size):
                checked += 1
                if _alpha(_without(tree, *removed)) + size != a:
                    continue
                if pendant <= set(removed):
                    return CheckResult(
                        "tree.pendant_outside_deletion",
                        FAIL,
                        removed,
                        "every pendant vertex lies in D",
                    )
    return CheckResult("tree.pendant_outside_deletion", PASS, (), f"{checked} subset(s)")


def lemma_suite(
    g: SignedGraph, seed: int = 0, sample_size: int = 32, loglevel: int = logging.WARNING
) -> List[CheckResult]:
    """
    Instantiate every rank, independence and cyclomatic lemma on g.

    Args:
        g: Signed graph to check
        seed: Seed for sampled induced subgraphs on larger graphs
        sample_size: Number of sampled subsets when exhaustive is too large
        loglevel: Logging level

    Returns:
        One CheckResult per lemma, in a fixed order
    """
    logger = get_logger(__name__, loglevel)
    rng = np.random.default_rng(seed)

    report = bound_check(g)
    r, alpha, c = report.r, report.alpha, report.c
    mu = matching_number(g)

    results = [
        check_induced_monotonicity(g, r, rng, sample_size),
        check_component_additivity(g, r),
        check_rank_zero(g, r),
        check_pendant_pair_rank(g, r),
        check_vertex_deletion_rank(g, r),
        check_cycle_rank_table(g, r),
        check_upper_certificate(g, r, alpha, report.alpha_witness),
        check_forest_rank(g, r, mu),
        check_bipartite_gallai(g, alpha, mu),
        check_forest_bound(g, r, alpha),
        check_cycle_lower_optimal(g, report.lower_optimal_direct),
        check_vertex_deletion_alpha(g, alpha),
        check_edge_deletion_alpha(g, alpha),
        check_pendant_alpha(g, alpha),
        check_cyclomatic_deletion(g, c),
        check_pendant_subtree_bound(g),
        check_pendant_outside_deletion(g),
    ]

    failed = [res.check_id for res in results if res.status == FAIL]
    if failed:
        logger.error("Lemma checks failed on %r: %s", g, failed, extra={"failed": failed})
    else:
        logger.debug("Lemma suite passed on %r", g)
    return results


# Consequences of lower-optimality


def corollary_suite(g: SignedGraph, loglevel: int = logging.WARNING) -> List[CheckResult]:
    """
    Consequences of lower-optimality at every vertex u lying on a cycle.

    Checks r(G - u) = r(G), G - u lower-optimal, c(G - u) = c(G) - 1,
    alpha(G - u) = alpha(G), and u on exactly one cycle and not quasi-pendant.
    When g is not lower-optimal or has no cycle a single skipped result is
    returned.
    """
    logger = get_logger(__name__, loglevel)
    report = bound_check(g)
    if not report.lower_optimal_direct:
        return [_skipped("corollary", "graph is not lower-optimal")]
    on_cycles = cycle_vertices(g)
    if not on_cycles:
        return [_skipped("corollary", "graph has no cycle")]

    quasi = set(quasi_pendant_vertices(g))
    failures = {}
    for u in on_cycles:
        reduced = bound_check(_without(g, u))
        claims = {
            "corollary.rank_preserved": reduced.r == report.r,
            "corollary.lower_optimal_after_deletion": reduced.lower_optimal_direct,
            "corollary.cyclomatic_drop": reduced.c == report.c - 1,
            "corollary.alpha_preserved": reduced.alpha == report.alpha,
            "corollary.single_cycle_not_quasi_pendant": (
                cycle_multiplicity(g, u) == 1 and u not in quasi
            ),
        }
        for claim, holds in claims.items():
            if not holds and claim not in failures:
                failures[claim] = u

    results = []
    for claim in (
        "corollary.rank_preserved",
        "corollary.lower_optimal_after_deletion",
        "corollary.cyclomatic_drop",
        "corollary.alpha_preserved",
        "corollary.single_cycle_not_quasi_pendant",
    ):
        if claim in failures:
            results.append(CheckResult(claim, FAIL, (failures[claim],), "fails at u"))
        else:
            results.append(CheckResult(claim, PASS, (), f"{len(on_cycles)} cycle vertex(es)"))
    if failures:
        logger.error("Corollary checks failed on %r: %s", g, sorted(failures))
    return results


def extremal_suite(g: SignedGraph, loglevel: int = logging.WARNING) -> List[CheckResult]:
    """
    Structure of lower-optimal graphs: components, pendant pairs, pendant
    cycles and the contraction identity.
    """
    logger = get_logger(__name__, loglevel)
    report = evaluate(g)
    lower_optimal = report.lower_optimal_direct
    results = []

    parts = components(g)
    parts_optimal = all(bound_check(part.graph).lower_optimal_direct for part in parts)
    results.append(
        CheckResult("extremal.component_decomposition", PASS, (), f"{len(parts)} component(s)")
        if parts_optimal == lower_optimal
        else CheckResult(
            "extremal.component_decomposition",
            FAIL,
            (),
            f"graph {lower_optimal}, components {parts_optimal}",
        )
    )

    pendant = pendant_vertices(g)
    if pendant:
        on_cycles = set(cycle_vertices(g))

        def examine(pair):
            v, u = pair
            reduced = bound_check(_without(g, u, v)).lower_optimal_direct
            expected = v not in on_cycles and reduced
            return None if expected == lower_optimal else f"reduction gives {expected}"

        pairs = ((g.neighbors(u)[0], u) for u in pendant)
        results.append(_verdict("extremal.pendant_pair_reduction", *_first_failure(pairs, examine)))
    else:
        results.append(_skipped("extremal.pendant_pair_reduction", "no pendant vertex"))

    if not lower_optimal:
        reason = "graph is not lower-optimal"
        results.append(_skipped("extremal.cycle_conditions", reason))
        results.append(_skipped("extremal.pendant_cycle", reason))
        results.append(_skipped("extremal.contraction_identity", reason))
        return results

    witness = report.structural_witness
    if witness.condition_i and witness.condition_ii:
        results.append(CheckResult("extremal.cycle_conditions", PASS))
    else:
        results.append(
            CheckResult(
                "extremal.cycle_conditions",
                FAIL,
                witness.disjointness.witness,
                f"disjoint={witness.condition_i}, residues={witness.condition_ii}",
            )
        )

    attached = pendant_cycles(g)
    if attached:

        def examine_cycle(entry):
            cyc, x = entry[:-1], entry[-1]
            length = len(cyc)
            k = _without(g, *cyc)
            g_prime = _without(g, *(v for v in cyc if v != x))
            k_report, prime_report = bound_check(k), bound_check(g_prime)
            checks = {
                "rank": report.r == length - 2 + k_report.r,
                "alpha": 2 * report.alpha == length + 2 * k_report.alpha,
                "k_lower_optimal": k_report.lower_optimal_direct,
                "g_prime_lower_optimal": prime_report.lower_optimal_direct,
                "g_prime_alpha": prime_report.alpha == k_report.alpha + 1,
                "g_prime_rank": prime_report.r == k_report.r,
            }
            broken = [name for name, holds in checks.items() if not holds]
            return ", ".join(broken) if broken else None

        entries = (cyc + (x,) for cyc, x in attached)
        results.append(_verdict("extremal.pendant_cycle", *_first_failure(entries, examine_cycle)))
    else:
        results.append(_skipped("extremal.pendant_cycle", "no pendant cycle"))

    half_lengths = sum(len(cyc) // 2 for cyc in witness.disjointness.cycles)
    if not witness.condition_i:
        results.append(_skipped("extremal.contraction_identity", "cycles intersect"))
    elif report.alpha == witness.alpha_t_g + half_lengths - report.c:
        results.append(CheckResult("extremal.contraction_identity", PASS))
    else:
        results.append(
            CheckResult(
                "extremal.contraction_identity",
                FAIL,
                (),
                f"alpha={report.alpha}, alpha(T_G)={witness.alpha_t_g}, c={report.c}",
            )
        )

    failed = [res.check_id for res in results if res.status == FAIL]
    if failed:
        logger.error("Extremal checks failed on %r: %s", g, failed)
    return results
