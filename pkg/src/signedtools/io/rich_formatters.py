"""
Rich console views of analysis reports and sweep summaries.
"""

from typing import Iterable, Optional

from rich import box
from rich.console import Console
from rich.table import Table

from ..analysis.enumerate import EnumerationSummary
from ..analysis.lemmas import FAIL, PASS, CheckResult
from ..analysis.theorems import OptimalityReport


def _verdict(value: Optional[bool]) -> str:
    if value is None:
        return "[dim]n/a[/dim]"
    return "[green]yes[/green]" if value else "[red]no[/red]"


class SignedGraphFormatter:
    """Rich table formatter for signed-graph reports."""

    STATUS_STYLE = {PASS: "green", FAIL: "bold red"}

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console(width=120)

    def print_report(self, report: OptimalityReport) -> None:
        """Invariants, bounds and both lower-optimality verdicts."""
        table = Table(
            title=f"Signed graph: n={report.n}, |E|={report.edge_count}",
            title_style="bold blue",
            box=box.ROUNDED,
        )
        table.add_column("Quantity", style="bold")
        table.add_column("Value", style="cyan", justify="right")

        rows = [
            ("r", str(report.r)),
            ("nullity", str(report.n - report.r)),
            ("alpha", f"{report.alpha}  {list(report.alpha_witness)}"),
        ]
        if report.mu is not None:
            rows.append(("m", str(report.mu)))
        rows.extend(
            [
                ("c", str(report.c)),
                ("omega", str(report.omega)),
                ("2n - 2c", str(report.lower_bound)),
                ("r + 2alpha", str(report.value)),
                ("2n", str(report.upper_bound)),
                ("bounds hold", _verdict(report.bound_ok)),
                ("lower-optimal (direct)", _verdict(report.lower_optimal_direct)),
                ("lower-optimal (structural)", _verdict(report.lower_optimal_structural)),
                ("agreement", _verdict(report.agreement)),
            ]
        )
        for name, value in rows:
            table.add_row(name, value)
        self.console.print(table)

        if report.structural_witness is not None:
            self.print_witness(report)

    def print_witness(self, report: OptimalityReport) -> None:
        witness = report.structural_witness
        table = Table(title="Structural conditions", title_style="bold green", box=box.SIMPLE)
        table.add_column("Condition", style="bold")
        table.add_column("Holds")
        table.add_column("Detail")

        disjointness = witness.disjointness
        detail = (
            f"{len(disjointness.cycles)} cycle(s)"
            if disjointness.disjoint
            else f"{disjointness.witness_kind} {list(disjointness.witness)}"
        )
        table.add_row("(i) disjoint cycles", _verdict(witness.condition_i), detail)

        cycles = ", ".join(
            f"C_{entry.length}{entry.sign.token} (mod 4: {entry.residue})"
            for entry in witness.cycles
        )
        table.add_row("(ii) residue and sign", _verdict(witness.condition_ii), cycles or "-")

        if witness.alpha_t_g is not None:
            detail = (
                f"alpha(T_G)={witness.alpha_t_g}, "
                f"alpha([T_G])={witness.alpha_t_g_bracket}, c={witness.c}"
            )
        else:
            detail = "-"
        table.add_row("(iii) contraction", _verdict(witness.condition_iii), detail)
        self.console.print(table)

    def print_checks(self, results: Iterable[CheckResult]) -> None:
        table = Table(title="Checks", title_style="bold blue", box=box.SIMPLE_HEAVY)
        table.add_column("Check", style="bold")
        table.add_column("Status")
        table.add_column("Witness", style="cyan")
        table.add_column("Detail")
        for res in results:
            style = self.STATUS_STYLE.get(res.status, "dim")
            table.add_row(
                res.check_id,
                f"[{style}]{res.status}[/{style}]",
                " ".join(str(v) for v in res.witness),
                res.detail,
            )
        self.console.print(table)

    def print_summary(self, summary: EnumerationSummary) -> None:
        table = Table(
            title=f"Sweep to order {summary.max_order} ({summary.mode.label})",
            title_style="bold blue",
            box=box.ROUNDED,
        )
        table.add_column("Order", justify="right", style="bold")
        table.add_column("Graphs", justify="right")
        table.add_column("Lower-optimal", justify="right", style="green")
        table.add_column("Upper attained", justify="right", style="yellow")
        for order in sorted(summary.graphs_per_order):
            table.add_row(
                str(order),
                str(summary.graphs_per_order[order]),
                str(summary.lower_optimal_count.get(order, 0)),
                str(summary.upper_attained_count.get(order, 0)),
            )
        self.console.print(table)

        status = "[green]no counterexample[/green]" if summary.ok else "[bold red]FAILED[/bold red]"
        self.console.print(
            f"{summary.graphs_visited} graphs, {summary.signings_visited} signings, "
            f"bound violations {summary.bound_violations}, "
            f"mismatches {summary.equivalence_mismatches}, "
            f"corollary failures {summary.corollary_failures}: {status}"
        )


def print_report_rich(
    report: OptimalityReport,
    checks: Optional[Iterable[CheckResult]] = None,
    console: Optional[Console] = None,
) -> None:
    formatter = SignedGraphFormatter(console)
    formatter.print_report(report)
    if checks is not None:
        formatter.print_checks(checks)


def print_summary_rich(summary: EnumerationSummary, console: Optional[Console] = None) -> None:
    SignedGraphFormatter(console).print_summary(summary)
