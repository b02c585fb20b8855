"""
Main CLI interface for signedtools - pure UI logic layer.

Parses arguments, configures logging and delegates every computation to the
core and analysis packages. Exit codes: 0 success, 1 verification
counterexample, 2 input error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from argparse_logging import add_log_level_argument

from ..analysis.enumerate import MAX_ORDER, dedup_counterexamples, verify_up_to
from ..analysis.generator import BuildRecipe, generate_corpus
from ..analysis.lemmas import FAIL, corollary_suite, extremal_suite, lemma_suite
from ..analysis.theorems import analyze, evaluate
from ..core.linalg import signed_rank
from ..exceptions import GraphInputError, SignedToolsError
from ..io.edgelist import parse_edge_list, read_edge_list, write_edge_list
from ..io.formatters import (
    checks_to_dict,
    format_checks_table,
    format_report_table,
    format_summary_table,
    json_print,
    report_to_dict,
    summary_to_dict,
)
from ..utils.logging import (
    LoggingConfig,
    configure_logging,
    get_logger,
    setup_console_logging,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2


def _level_value(level) -> int:
    """argparse_logging hands back an enum member; accept ints and names too."""
    if hasattr(level, "value"):
        return int(level.value)
    if isinstance(level, str):
        return logging.getLevelName(level.upper())
    return int(level) if level is not None else logging.WARNING


def _configure_logging(args: argparse.Namespace) -> int:
    """Configure the logging system from command line arguments."""
    console_level = _level_value(getattr(args, "log_level", logging.WARNING))

    # Keep stderr quiet unless more was explicitly requested
    if console_level == logging.INFO and not args.debug_all:
        console_level = logging.WARNING

    if args.debug_all and not args.log_dir:
        console_level = logging.DEBUG

    if args.log_dir:
        configure_logging(
            LoggingConfig(
                console_level=console_level,
                file_level=logging.DEBUG if args.debug_all else logging.INFO,
                log_dir=args.log_dir,
                console_format=args.log_format,
                file_format="human",
                structured_file=True,
            ),
            force_reconfigure=True,
        )
    else:
        setup_console_logging(console_level, args.log_format)
    return console_level


def setup_argument_parser() -> argparse.ArgumentParser:
    """
    Set up command line argument parser for signedtools.

    Returns:
        Configured ArgumentParser instance
    """
    parser = argparse.ArgumentParser(
        prog="signedtools",
        description="Exact rank, independence and cycle-structure toolkit for signed graphs",
        epilog="""
QUICK START:
  # Rank and nullity of a signed graph
  signedtools rank graph.txt

  # Full report with both lower-optimality verdicts
  signedtools analyze graph.txt --json

  # Exhaustive sweep of all connected signed graphs up to order 6
  signedtools verify --max-order 6 --connected-only --mod-switching --jobs 4

  # Ten lower-optimal graphs built from a 4-cycle and a 6-cycle
  signedtools generate --cycles 4 6 --steps 3 --count 10 --out corpus/

INPUT FORMAT:
  n 4
  0 1 +
  1 2 -

OUTPUT STREAMS:
  stdout: Program data (tables, JSON reports)
  stderr: Status messages, progress, errors (use 2>/dev/null to hide)

EXIT CODES:
  0 success, 1 verification counterexample, 2 input error
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    add_log_level_argument(parser)

    # Logging options
    logging_options = parser.add_argument_group(title="Logging options")
    logging_options.add_argument(
        "--log-dir", type=str, help="Directory for log files (enables file logging)"
    )
    logging_options.add_argument(
        "--log-format",
        choices=["human", "json"],
        default="human",
        help="Log format (human-readable or structured JSON)",
    )
    logging_options.add_argument(
        "--debug-all", action="store_true", help="Enable debug logging for all modules"
    )

    subparsers = parser.add_subparsers(
        title="Subcommands", description="valid subcommands", dest="subcommand", required=True
    )

    analyze_options = subparsers.add_parser(
        "analyze",
        help="Invariants, bounds and lower-optimality verdicts of one signed graph",
        epilog="""
Examples:
  signedtools analyze c4.txt
  signedtools analyze c4.txt --lemmas --plain
  signedtools analyze c4.txt --json | jq .lower_optimal_direct
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    analyze_options.add_argument("path", help="Signed edge-list file")
    analyze_options.add_argument("--json", action="store_true", help="JSON report on stdout")
    analyze_options.add_argument(
        "--lemmas", action="store_true", help="Also run the lemma, corollary and extremal checks"
    )
    analyze_options.add_argument(
        "--plain", action="store_true", help="Plain tables instead of rich output"
    )
    analyze_options.add_argument("--seed", type=int, default=0, help="Seed for sampled checks")

    verify_options = subparsers.add_parser(
        "verify",
        help="Exhaustive check of both bounds and both deciders",
        epilog=f"""
Examples:
  signedtools verify --max-order 5
  signedtools verify --max-order 6 --connected-only --mod-switching --json
  signedtools verify --max-order 6 --mod-switching --jobs 8 --corollary

Orders above {MAX_ORDER} are rejected.
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verify_options.add_argument("--max-order", type=int, required=True, help="Largest order")
    verify_options.add_argument(
        "--connected-only", action="store_true", help="Only connected underlying graphs"
    )
    verify_options.add_argument(
        "--mod-switching", action="store_true", help="One signing per switching class"
    )
    verify_options.add_argument("--jobs", type=int, default=1, help="Worker processes")
    verify_options.add_argument("--json", action="store_true", help="JSON summary on stdout")
    verify_options.add_argument(
        "--corollary",
        action="store_true",
        help="Check the consequences of lower-optimality at every cycle vertex",
    )
    verify_options.add_argument(
        "--dump-dir", type=str, help="Write counterexamples as edge-list files here"
    )
    verify_options.add_argument(
        "--plain", action="store_true", help="Plain tables instead of rich output"
    )

    generate_options = subparsers.add_parser(
        "generate",
        help="Write a corpus of lower-optimal signed graphs",
        epilog="""
Examples:
  signedtools generate --cycles 4 --steps 1 --count 3 --out corpus/
  signedtools generate --recipe recipe.json --count 100 --out corpus/ --seed 7
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    source = generate_options.add_mutually_exclusive_group()
    source.add_argument("--recipe", type=str, help="Recipe JSON file")
    source.add_argument(
        "--cycles", type=int, nargs="*", default=None, help="Cycle lengths (even, >= 4)"
    )
    generate_options.add_argument("--steps", type=int, default=0, help="Pendant-pair expansions")
    generate_options.add_argument("--isolated", type=int, default=0, help="Isolated vertices")
    generate_options.add_argument(
        "--attach-probability", type=float, default=0.5, help="Chance to join each component"
    )
    generate_options.add_argument("--count", type=int, default=1, help="Number of graphs")
    generate_options.add_argument("--out", type=str, required=True, help="Output directory")
    generate_options.add_argument("--seed", type=int, default=None, help="First seed (default 0)")

    rank_options = subparsers.add_parser("rank", help="Exact rank and nullity")
    rank_options.add_argument("path", help="Signed edge-list file")
    rank_options.add_argument("--json", action="store_true", help="JSON output")

    return parser


def cmd_analyze(args: argparse.Namespace, loglevel: int) -> int:
    g = read_edge_list(args.path, loglevel)
    report = analyze(g, with_matching=True)

    checks = None
    if args.lemmas:
        checks = (
            lemma_suite(g, seed=args.seed, loglevel=loglevel)
            + corollary_suite(g, loglevel)
            + extremal_suite(g, loglevel)
        )

    if args.json:
        data = report_to_dict(report)
        if checks is not None:
            data["checks"] = checks_to_dict(checks)
        print(json_print(data))
    elif args.plain:
        print(format_report_table(report))
        if checks is not None:
            print()
            print(format_checks_table(checks))
    else:
        from ..io.rich_formatters import print_report_rich

        print_report_rich(report, checks)

    failed = not report.bound_ok or not report.agreement
    if checks is not None:
        failed = failed or any(res.status == FAIL for res in checks)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_verify(args: argparse.Namespace, loglevel: int) -> int:
    logger = get_logger(__name__, loglevel)
    summary = verify_up_to(
        args.max_order,
        connected_only=args.connected_only,
        mod_switching=args.mod_switching,
        jobs=args.jobs,
        check_corollary=args.corollary,
        loglevel=loglevel,
    )

    if args.json:
        print(json_print(summary_to_dict(summary)))
    elif args.plain:
        print(format_summary_table(summary))
    else:
        from ..io.rich_formatters import print_summary_rich

        print_summary_rich(summary)

    if summary.ok:
        return EXIT_OK

    if args.dump_dir:
        out = Path(args.dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, text in enumerate(dedup_counterexamples(summary.counterexamples)):
            path = out / f"counterexample_{k:04d}.txt"
            write_edge_list(parse_edge_list(text), path, loglevel)
        logger.warning(f"Counterexamples written to {out}")
    return EXIT_COUNTEREXAMPLE


def _recipe_from_args(args: argparse.Namespace) -> BuildRecipe:
    if args.recipe:
        try:
            data = json.loads(Path(args.recipe).read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            raise GraphInputError(f"cannot read recipe {args.recipe}: {e}") from e
        if not isinstance(data, dict):
            raise GraphInputError(f"recipe {args.recipe} must hold a JSON object")
        recipe = BuildRecipe.from_dict(data)
    else:
        recipe = BuildRecipe(
            cycle_specs=tuple(args.cycles or ()),
            expansion_steps=args.steps,
            isolated_vertices=args.isolated,
            attach_probability=args.attach_probability,
        )
    if args.seed is not None:
        recipe = recipe._replace(seed=args.seed)
    return recipe.validate()


def cmd_generate(args: argparse.Namespace, loglevel: int) -> int:
    logger = get_logger(__name__, loglevel)
    recipe = _recipe_from_args(args)
    corpus = generate_corpus(recipe, args.count, loglevel)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for k, (member, g) in enumerate(corpus):
        report = evaluate(g)
        if not (report.lower_optimal_direct and report.lower_optimal_structural):
            logger.error(
                f"Seed {member.seed} produced a graph that is not lower-optimal",
                extra={"seed": member.seed},
            )
            return EXIT_COUNTEREXAMPLE
        path = write_edge_list(g, out / f"graph_{k:04d}.txt", loglevel)
        files.append({"file": path.name, "seed": member.seed, "n": g.n})
        print(path)

    manifest = {"recipe": recipe.to_dict(), "count": args.count, "graphs": files}
    (out / "recipe.json").write_text(json_print(manifest) + "\n", encoding="utf-8")
    logger.info(f"Wrote {len(files)} graph(s) to {out}", extra={"count": len(files)})
    return EXIT_OK


def cmd_rank(args: argparse.Namespace, loglevel: int) -> int:
    g = read_edge_list(args.path, loglevel)
    r = signed_rank(g)
    if args.json:
        print(json_print({"n": g.n, "r": r, "nullity": g.n - r}))
    else:
        print(f"r {r}")
        print(f"nullity {g.n - r}")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "rank": cmd_rank,
}


def main_cli(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Returns:
        Exit code (0 success, 1 verification counterexample, 2 input error)
    """
    parser = setup_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    loglevel = _configure_logging(args)
    logger = get_logger(__name__, loglevel, extra_context={"subcommand": args.subcommand})
    logger.debug("signedtools started")

    try:
        return COMMANDS[args.subcommand](args, loglevel)
    except SignedToolsError as e:
        logger.error(f"{e}")
        return EXIT_INPUT_ERROR
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main_cli())
