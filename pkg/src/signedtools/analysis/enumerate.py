"""
Exhaustive sweep over all small signed graphs.

Underlying graphs on n labeled vertices are enumerated by edge bitmask: bit k
of the mask selects the k-th pair (i, j), i < j, in lexicographic order. Every
signing of each underlying graph (or one representative per switching class)
is checked against both bounds and both lower-optimality deciders.

Work is partitioned into contiguous mask ranges per order; each range yields
a partial summary and partial summaries merge associatively, so the result
does not depend on the number of worker processes.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from ..core.cycles import spanning_forest_edges
from ..core.graph import Edge, Sign, SignedGraph, is_connected
from ..exceptions import GraphInputError
from ..io.edgelist import format_edge_list, parse_edge_list
from ..utils.logging import get_logger
from .lemmas import FAIL, corollary_suite
from .theorems import evaluate, underlying_profile

MAX_ORDER = 10
CANONICAL_MAX_ORDER = 8

# Contiguous ranges handed to each worker per order and worker
CHUNKS_PER_JOB = 4


class EnumerationMode(NamedTuple):
    connected_only: bool = False
    mod_switching: bool = False

    @property
    def label(self) -> str:
        graphs = "labeled-connected" if self.connected_only else "labeled-all"
        signings = "mod-switching" if self.mod_switching else "all-signings"
        return f"{graphs}/{signings}"


def _merge_counts(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    merged = dict(a)
    for key, value in b.items():
        merged[key] = merged.get(key, 0) + value
    return merged


@dataclass
class EnumerationSummary:
    """
    Counts collected by a sweep.

    ``bound_violations``, ``equivalence_mismatches`` and ``corollary_failures``
    are zero on every correct run; ``counterexamples`` holds signed edge-list
    text of each offending graph. ``elapsed`` is wall time in seconds.
    """

    max_order: int
    mode: EnumerationMode
    graphs_visited: int = 0
    signings_visited: int = 0
    bound_violations: int = 0
    equivalence_mismatches: int = 0
    corollary_failures: int = 0
    graphs_per_order: Dict[int, int] = field(default_factory=dict)
    lower_optimal_count: Dict[int, int] = field(default_factory=dict)
    upper_attained_count: Dict[int, int] = field(default_factory=dict)
    counterexamples: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.bound_violations or self.equivalence_mismatches or self.corollary_failures)

    def merge(self, other: "EnumerationSummary") -> "EnumerationSummary":
        """Combine two partial summaries of the same mode."""
        if self.mode != other.mode:
            raise GraphInputError(f"cannot merge {self.mode.label} with {other.mode.label}")
        return EnumerationSummary(
            max_order=max(self.max_order, other.max_order),
            mode=self.mode,
            graphs_visited=self.graphs_visited + other.graphs_visited,
            signings_visited=self.signings_visited + other.signings_visited,
            bound_violations=self.bound_violations + other.bound_violations,
            equivalence_mismatches=self.equivalence_mismatches + other.equivalence_mismatches,
            corollary_failures=self.corollary_failures + other.corollary_failures,
            graphs_per_order=_merge_counts(self.graphs_per_order, other.graphs_per_order),
            lower_optimal_count=_merge_counts(self.lower_optimal_count, other.lower_optimal_count),
            upper_attained_count=_merge_counts(
                self.upper_attained_count, other.upper_attained_count
            ),
            counterexamples=sorted(self.counterexamples + other.counterexamples),
            elapsed=self.elapsed + other.elapsed,
        )


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise GraphInputError(f"order {n} outside 1..{MAX_ORDER}")


def vertex_pairs(n: int) -> List[Edge]:
    """All pairs (i, j), i < j, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_mask(n: int, mask: int, pairs: Optional[List[Edge]] = None) -> SignedGraph:
    """All-Plus graph whose edge k is present iff bit k of mask is set."""
    pairs = pairs if pairs is not None else vertex_pairs(n)
    return SignedGraph.from_edges(n, (pair for k, pair in enumerate(pairs) if mask >> k & 1))


def _underlying_range(
    n: int, start: int, stop: int, connected_only: bool
) -> Iterator[SignedGraph]:
    pairs = vertex_pairs(n)
    for mask in range(start, stop):
        g = graph_from_mask(n, mask, pairs)
        if connected_only and not is_connected(g):
            continue
        yield g


def enumerate_underlying(n: int, connected_only: bool = False) -> Iterator[SignedGraph]:
    """
    Every labeled simple graph on n vertices exactly once, ordered by mask.

    Raises:
        GraphInputError: if n is outside 1..MAX_ORDER
    """
    _check_order(n)
    return _underlying_range(n, 0, 1 << len(vertex_pairs(n)), connected_only)


def enumerate_signings(g: SignedGraph, mod_switching: bool = False) -> Iterator[SignedGraph]:
    """
    Signings of the underlying graph of g, ordered by sign mask.

    With ``mod_switching`` the edges of the lowest-id DFS spanning forest stay
    Plus and only the c(G) remaining edges vary, giving one signing per
    switching class; otherwise all 2^|E| signings are produced.
    """
    if mod_switching:
        forest = set(spanning_forest_edges(g))
        free = [e for e in g.edges if e not in forest]
    else:
        free = list(g.edges)

    for mask in range(1 << len(free)):
        signs = {e: Sign.MINUS for k, e in enumerate(free) if mask >> k & 1}
        yield SignedGraph.from_edges(g.n, g.edges, signs)


def verify_range(
    n: int,
    start: int,
    stop: int,
    mode: EnumerationMode,
    check_corollary: bool = False,
) -> EnumerationSummary:
    """Sweep the underlying graphs with masks in [start, stop) on n vertices."""
    began = time.perf_counter()
    summary = EnumerationSummary(max_order=n, mode=mode)
    graphs = lower = upper = 0

    for g in _underlying_range(n, start, stop, mode.connected_only):
        graphs += 1
        profile = underlying_profile(g)
        for signed in enumerate_signings(g, mode.mod_switching):
            summary.signings_visited += 1
            report = evaluate(signed, profile)
            offending = False
            if not report.bound_ok:
                summary.bound_violations += 1
                offending = True
            if not report.agreement:
                summary.equivalence_mismatches += 1
                offending = True
            if report.lower_optimal_direct:
                lower += 1
                if check_corollary and any(
                    res.status == FAIL for res in corollary_suite(signed)
                ):
                    summary.corollary_failures += 1
                    offending = True
            if report.upper_attained:
                upper += 1
            if offending:
                summary.counterexamples.append(format_edge_list(signed))

    summary.graphs_visited = graphs
    summary.graphs_per_order = {n: graphs}
    summary.lower_optimal_count = {n: lower}
    summary.upper_attained_count = {n: upper}
    summary.elapsed = time.perf_counter() - began
    return summary


def _ranges(n: int, parts: int) -> List[Tuple[int, int]]:
    total = 1 << len(vertex_pairs(n))
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts) if bounds[k] < bounds[k + 1]]


def _run_task(task: Tuple[int, int, int, EnumerationMode, bool]) -> EnumerationSummary:
    return verify_range(*task)


def verify_up_to(
    n_max: int,
    connected_only: bool = False,
    mod_switching: bool = False,
    jobs: int = 1,
    check_corollary: bool = False,
    loglevel: int = logging.WARNING,
) -> EnumerationSummary:
    """
    Check both bounds and both deciders on every signed graph of order <= n_max.

    Args:
        n_max: Largest order to sweep
        connected_only: Restrict to connected underlying graphs
        mod_switching: One signing per switching class
        jobs: Worker processes; 1 runs in-process
        check_corollary: Also run the lower-optimality consequences on every
            lower-optimal signing
        loglevel: Logging level

    Returns:
        Merged summary; counterexamples are reported, never raised

    Raises:
        GraphInputError: if n_max is outside 1..MAX_ORDER or jobs < 1
    """
    logger = get_logger(__name__, loglevel)
    _check_order(n_max)
    if jobs < 1:
        raise GraphInputError(f"jobs must be at least 1, got {jobs}")

    mode = EnumerationMode(connected_only, mod_switching)
    parts = 1 if jobs == 1 else jobs * CHUNKS_PER_JOB
    tasks = [
        (n, start, stop, mode, check_corollary)
        for n in range(1, n_max + 1)
        for start, stop in _ranges(n, parts)
    ]
    logger.info(
        f"Sweeping orders 1..{n_max} ({mode.label}) in {len(tasks)} range(s) on {jobs} job(s)",
        extra={"max_order": n_max, "mode": mode.label, "jobs": jobs},
    )

    began = time.perf_counter()
    if jobs == 1:
        partials: Iterable[EnumerationSummary] = map(_run_task, tasks)
        summary = _fold(n_max, mode, partials)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            summary = _fold(n_max, mode, pool.map(_run_task, tasks))
    summary.elapsed = time.perf_counter() - began

    for order in range(1, n_max + 1):
        for counts in (
            summary.graphs_per_order,
            summary.lower_optimal_count,
            summary.upper_attained_count,
        ):
            counts.setdefault(order, 0)

    if summary.ok:
        logger.info(
            f"Sweep finished: {summary.graphs_visited} graphs, "
            f"{summary.signings_visited} signings, no counterexample",
            extra={"graphs": summary.graphs_visited, "signings": summary.signings_visited},
        )
    else:
        logger.error(
            f"Sweep found {len(summary.counterexamples)} counterexample(s)",
            extra={
                "bound_violations": summary.bound_violations,
                "equivalence_mismatches": summary.equivalence_mismatches,
                "corollary_failures": summary.corollary_failures,
            },
        )
    return summary


def _fold(
    n_max: int, mode: EnumerationMode, partials: Iterable[EnumerationSummary]
) -> EnumerationSummary:
    summary = EnumerationSummary(max_order=n_max, mode=mode)
    for partial in partials:
        summary = summary.merge(partial)
    return summary


# Report deduplication


def canonical_key(g: SignedGraph) -> Tuple[int, Tuple[Tuple[int, int, int], ...]]:
    """
    Isomorphism-invariant key of a signed graph.

    Minimum signed edge list over all relabelings that order vertices by
    degree; brute force, so limited to CANONICAL_MAX_ORDER vertices.

    Raises:
        GraphInputError: if g has more than CANONICAL_MAX_ORDER vertices
    """
    if g.n > CANONICAL_MAX_ORDER:
        raise GraphInputError(f"canonical key limited to n <= {CANONICAL_MAX_ORDER}")

    degree_classes: Dict[int, List[int]] = {}
    for v in range(g.n):
        degree_classes.setdefault(len(g.neighbors(v)), []).append(v)
    classes = [degree_classes[d] for d in sorted(degree_classes)]

    best = None
    for arrangement in product(*(permutations(members) for members in classes)):
        order = [v for block in arrangement for v in block]
        position = {v: k for k, v in enumerate(order)}
        key = tuple(
            sorted(
                (min(position[u], position[v]), max(position[u], position[v]), int(s))
                for u, v, s in g.signed_edges()
            )
        )
        if best is None or key < best:
            best = key
    return g.n, best or ()


def dedup_counterexamples(texts: Iterable[str]) -> List[str]:
    """Keep one edge-list text per isomorphism class, in sorted order."""
    seen = set()
    kept = []
    for text in sorted(texts):
        g = parse_edge_list(text)
        key = canonical_key(g) if g.n <= CANONICAL_MAX_ORDER else text
        if key not in seen:
            seen.add(key)
            kept.append(text)
    return kept
