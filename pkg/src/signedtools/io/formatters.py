"""
Output formatting for reports, check results and sweep summaries.

JSON documents use snake_case keys and contain only integers, booleans,
strings, nulls, arrays and objects.
"""

import json
from typing import Any, Dict, Iterable, List

from tabulate import tabulate

from ..analysis.enumerate import EnumerationSummary
from ..analysis.lemmas import CheckResult
from ..analysis.theorems import OptimalityReport, StructuralWitness


def json_print(data: Any) -> str:
    """
    Format data structure as pretty-printed JSON.

    Args:
        data: Data structure to format

    Returns:
        Pretty-printed JSON string
    """
    return json.dumps(data, indent=2, default=str)


def witness_to_dict(witness: StructuralWitness) -> Dict[str, Any]:
    disjointness = witness.disjointness
    return {
        "condition_i": witness.condition_i,
        "condition_ii": witness.condition_ii,
        "condition_iii": witness.condition_iii,
        "disjointness": {
            "disjoint": disjointness.disjoint,
            "witness_kind": disjointness.witness_kind,
            "witness": list(disjointness.witness),
        },
        "cycles": [
            {
                "vertices": list(entry.vertices),
                "length": entry.length,
                "residue": entry.residue,
                "sign": entry.sign.token,
                "ok": entry.ok,
            }
            for entry in witness.cycles
        ],
        "alpha_t_g": witness.alpha_t_g,
        "alpha_t_g_bracket": witness.alpha_t_g_bracket,
        "c": witness.c,
    }


def report_to_dict(report: OptimalityReport) -> Dict[str, Any]:
    """Stable JSON form of an OptimalityReport; ``mu`` only when computed."""
    data: Dict[str, Any] = {
        "n": report.n,
        "edge_count": report.edge_count,
        "r": report.r,
        "nullity": report.n - report.r,
        "alpha": report.alpha,
        "alpha_witness": list(report.alpha_witness),
    }
    if report.mu is not None:
        data["mu"] = report.mu
    data.update(
        {
            "c": report.c,
            "omega": report.omega,
            "lower_bound": report.lower_bound,
            "upper_bound": report.upper_bound,
            "value": report.value,
            "bound_ok": report.bound_ok,
            "upper_attained": report.upper_attained,
            "lower_optimal_direct": report.lower_optimal_direct,
            "lower_optimal_structural": report.lower_optimal_structural,
            "agreement": report.agreement,
            "structural_witness": (
                witness_to_dict(report.structural_witness)
                if report.structural_witness is not None
                else None
            ),
        }
    )
    return data


def checks_to_dict(results: Iterable[CheckResult]) -> List[Dict[str, Any]]:
    return [
        {
            "check_id": res.check_id,
            "status": res.status,
            "witness": list(res.witness),
            "detail": res.detail,
        }
        for res in results
    ]


def _per_order(counts: Dict[int, int]) -> Dict[str, int]:
    return {str(order): counts[order] for order in sorted(counts)}


def summary_to_dict(summary: EnumerationSummary) -> Dict[str, Any]:
    """Stable JSON form of a sweep summary; wall time is left out."""
    return {
        "max_order": summary.max_order,
        "mode": summary.mode.label,
        "connected_only": summary.mode.connected_only,
        "mod_switching": summary.mode.mod_switching,
        "graphs_visited": summary.graphs_visited,
        "signings_visited": summary.signings_visited,
        "bound_violations": summary.bound_violations,
        "equivalence_mismatches": summary.equivalence_mismatches,
        "corollary_failures": summary.corollary_failures,
        "graphs_per_order": _per_order(summary.graphs_per_order),
        "lower_optimal_count": _per_order(summary.lower_optimal_count),
        "upper_attained_count": _per_order(summary.upper_attained_count),
        "counterexamples": list(summary.counterexamples),
    }


def format_report_table(report: OptimalityReport, tablefmt: str = "simple") -> str:
    """Two-column table of the quantities in a report."""
    rows = [
        ["n", report.n],
        ["|E|", report.edge_count],
        ["r", report.r],
        ["nullity", report.n - report.r],
        ["alpha", report.alpha],
    ]
    if report.mu is not None:
        rows.append(["m", report.mu])
    rows.extend(
        [
            ["c", report.c],
            ["omega", report.omega],
            ["bounds", f"[{report.lower_bound}, {report.upper_bound}]"],
            ["r + 2alpha", report.value],
            ["lower-optimal (direct)", report.lower_optimal_direct],
            ["lower-optimal (structural)", report.lower_optimal_structural],
            ["agreement", report.agreement],
        ]
    )
    return tabulate(rows, headers=["Quantity", "Value"], tablefmt=tablefmt)


def format_checks_table(results: Iterable[CheckResult], tablefmt: str = "simple") -> str:
    rows = [[res.check_id, res.status, list(res.witness) or "", res.detail] for res in results]
    if not rows:
        return "No checks run."
    return tabulate(rows, headers=["Check", "Status", "Witness", "Detail"], tablefmt=tablefmt)


def format_summary_table(summary: EnumerationSummary, tablefmt: str = "simple") -> str:
    """Per-order counts of a sweep."""
    rows = [
        [
            order,
            summary.graphs_per_order.get(order, 0),
            summary.lower_optimal_count.get(order, 0),
            summary.upper_attained_count.get(order, 0),
        ]
        for order in sorted(summary.graphs_per_order)
    ]
    return tabulate(
        rows,
        headers=["Order", "Graphs", "Lower-optimal", "Upper attained"],
        tablefmt=tablefmt,
    )
