"""
Deciders for the rank-independence bounds of signed graphs.

For a signed graph on n vertices with cyclomatic number c,

    2n - 2c <= r + 2*alpha <= 2n

and the lower bound is attained ("lower-optimal") exactly when

    (i)   the cycles are pairwise vertex-disjoint,
    (ii)  every cycle C_q has q = 0 (mod 4) with positive sign or
          q = 2 (mod 4) with negative sign,
    (iii) alpha(T_G) = alpha([T_G]) + c.

The direct decider evaluates the equation with exact integers; the
structural decider evaluates the three conditions. Both are pure.
"""

from typing import NamedTuple, Optional, Tuple

from ..core.cycles import (
    CycleStructure,
    DisjointnessVerdict,
    contract,
    cycle_sign,
    cycles_vertex_disjoint,
)
from ..core.graph import Sign, SignedGraph, VertexSet, component_count
from ..core.invariants import cyclomatic_number, independence_number, matching_number
from ..core.linalg import signed_rank


class CycleVerdict(NamedTuple):
    """Residue and sign check of one cycle."""

    vertices: Tuple[int, ...]
    length: int
    residue: int
    sign: Sign
    ok: bool


class StructuralWitness(NamedTuple):
    """Per-condition detail of the structural decider."""

    disjointness: DisjointnessVerdict
    cycles: Tuple[CycleVerdict, ...]
    alpha_t_g: Optional[int]
    alpha_t_g_bracket: Optional[int]
    c: int
    condition_i: bool
    condition_ii: Optional[bool]
    condition_iii: Optional[bool]

    @property
    def holds(self) -> bool:
        return bool(self.condition_i and self.condition_ii and self.condition_iii)


class UnderlyingProfile(NamedTuple):
    """
    Everything the deciders need that depends only on the underlying graph.

    Computed once per underlying graph and shared by all of its signings.
    """

    n: int
    edge_count: int
    alpha: int
    alpha_witness: VertexSet
    c: int
    omega: int
    disjointness: DisjointnessVerdict
    structure: Optional[CycleStructure]
    alpha_t_g: Optional[int]
    alpha_t_g_bracket: Optional[int]


class OptimalityReport(NamedTuple):
    """
    Exact bound values and lower-optimality verdicts of one signed graph.

    ``bound_check`` leaves the structural fields as ``None``.
    """

    n: int
    edge_count: int
    r: int
    alpha: int
    alpha_witness: VertexSet
    c: int
    omega: int
    lower_bound: int
    upper_bound: int
    value: int
    bound_ok: bool
    lower_optimal_direct: bool
    upper_attained: bool
    lower_optimal_structural: Optional[bool] = None
    agreement: Optional[bool] = None
    structural_witness: Optional[StructuralWitness] = None
    mu: Optional[int] = None


def cycle_condition_holds(length: int, sign: Sign) -> bool:
    """Residue/sign condition on one cycle."""
    residue = length % 4
    return (residue == 0 and sign is Sign.PLUS) or (residue == 2 and sign is Sign.MINUS)


def underlying_profile(g: SignedGraph) -> UnderlyingProfile:
    alpha, witness = independence_number(g)
    disjointness = cycles_vertex_disjoint(g)
    structure = alpha_t_g = alpha_t_g_bracket = None
    if disjointness.disjoint:
        structure = contract(g)
        alpha_t_g, _ = independence_number(structure.t_g)
        alpha_t_g_bracket, _ = independence_number(structure.t_g_bracket)
    return UnderlyingProfile(
        n=g.n,
        edge_count=g.edge_count,
        alpha=alpha,
        alpha_witness=witness,
        c=cyclomatic_number(g),
        omega=component_count(g),
        disjointness=disjointness,
        structure=structure,
        alpha_t_g=alpha_t_g,
        alpha_t_g_bracket=alpha_t_g_bracket,
    )


def _bounds_report(g: SignedGraph, profile: UnderlyingProfile) -> OptimalityReport:
    r = signed_rank(g)
    lower, upper = 2 * g.n - 2 * profile.c, 2 * g.n
    value = r + 2 * profile.alpha
    return OptimalityReport(
        n=g.n,
        edge_count=g.edge_count,
        r=r,
        alpha=profile.alpha,
        alpha_witness=profile.alpha_witness,
        c=profile.c,
        omega=profile.omega,
        lower_bound=lower,
        upper_bound=upper,
        value=value,
        bound_ok=lower <= value <= upper,
        lower_optimal_direct=value == lower,
        upper_attained=value == upper,
    )


def bound_check(g: SignedGraph) -> OptimalityReport:
    """r, alpha, c and both bounds; nothing is asserted, bound_ok is reported."""
    return _bounds_report(g, underlying_profile(g))


def is_lower_optimal_direct(g: SignedGraph) -> bool:
    """True iff r + 2*alpha = 2n - 2c."""
    return bound_check(g).lower_optimal_direct


def structural_witness(g: SignedGraph, profile: UnderlyingProfile) -> StructuralWitness:
    """Evaluate conditions (i)-(iii) for the signing g of the profiled graph."""
    if not profile.disjointness.disjoint:
        return StructuralWitness(
            disjointness=profile.disjointness,
            cycles=(),
            alpha_t_g=None,
            alpha_t_g_bracket=None,
            c=profile.c,
            condition_i=False,
            condition_ii=None,
            condition_iii=None,
        )

    verdicts = []
    for cyc in profile.disjointness.cycles:
        sign = cycle_sign(g, cyc)
        verdicts.append(
            CycleVerdict(cyc, len(cyc), len(cyc) % 4, sign, cycle_condition_holds(len(cyc), sign))
        )

    return StructuralWitness(
        disjointness=profile.disjointness,
        cycles=tuple(verdicts),
        alpha_t_g=profile.alpha_t_g,
        alpha_t_g_bracket=profile.alpha_t_g_bracket,
        c=profile.c,
        condition_i=True,
        condition_ii=all(v.ok for v in verdicts),
        condition_iii=profile.alpha_t_g == profile.alpha_t_g_bracket + profile.c,
    )


def is_lower_optimal_structural(g: SignedGraph) -> Tuple[bool, StructuralWitness]:
    witness = structural_witness(g, underlying_profile(g))
    return witness.holds, witness


def evaluate(g: SignedGraph, profile: Optional[UnderlyingProfile] = None) -> OptimalityReport:
    """
    Bounds plus both deciders, reusing a precomputed profile when given.

    The profile must belong to the underlying graph of g.
    """
    if profile is None:
        profile = underlying_profile(g)
    report = _bounds_report(g, profile)
    witness = structural_witness(g, profile)
    return report._replace(
        lower_optimal_structural=witness.holds,
        agreement=witness.holds == report.lower_optimal_direct,
        structural_witness=witness,
    )


def check_equivalence(g: SignedGraph) -> bool:
    """Direct and structural lower-optimality verdicts agree."""
    return bool(evaluate(g).agreement)


def analyze(g: SignedGraph, with_matching: bool = False) -> OptimalityReport:
    """Full report; the matching number is optional since it is only informative."""
    report = evaluate(g)
    if with_matching:
        report = report._replace(mu=matching_number(g))
    return report
