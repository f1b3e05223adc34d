"""
CLI for the lambda-trees project.
"""

# imports
import argparse
import sys
from pathlib import Path
from typing import Callable, NoReturn, Optional, Sequence

# packages
from rich.console import Console
from rich.progress import (
    Progress,
    TaskProgressColumn,
    TextColumn,
    TimeElapsedColumn,
    TimeRemainingColumn,
)

# project
from lambda_trees.checker import CHECK_NAMES, SPACE_CHECKS, CheckConfig, CheckStatus, condition_a_probe
from lambda_trees.cli.report import OutputFormat, RunConfig, RunReport, emit
from lambda_trees.config import CONFIG
from lambda_trees.errors import ConfigError, LambdaTreesError
from lambda_trees.groups import GroupId
from lambda_trees.logger import LOGGER
from lambda_trees.spaces import parse_space_spec


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that raises ConfigError instead of exiting.
    """

    def error(self, message: str) -> NoReturn:
        raise ConfigError(message)


def build_parser() -> ArgumentParser:
    """
    Build the command-line parser.

    Returns:
        ArgumentParser: The parser.
    """
    parser = ArgumentParser(
        prog="lambda-trees",
        description="Seeded checks of the Lambda-tree axioms on exact-arithmetic spaces.",
    )
    parser.add_argument("--group", required=True, help="Group id: " + ", ".join(group.value for group in GroupId))
    parser.add_argument("--space", default=None, help="Space: interval:a..b, tree:@file, tree:random, x1:λ0, x2, x3:a, l1grid:side")
    parser.add_argument("--check", action="append", choices=CHECK_NAMES, help="Check to run (repeatable).")
    parser.add_argument(
        "--expect", action="append", choices=("pass", "fail"), help="Expected outcome, paired with --check by position."
    )
    parser.add_argument("--seed", type=int, default=CONFIG.default_seed)
    parser.add_argument("--samples", type=int, default=CONFIG.default_samples)
    parser.add_argument("--chain-depth", type=int, default=CONFIG.default_chain_depth)
    parser.add_argument("--format", choices=[item.value for item in OutputFormat], default=OutputFormat.JSON.value)
    parser.add_argument("--out", type=Path, default=None, help="Write the report here instead of stdout.")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    """
    Parse and validate command-line arguments.

    Args:
        argv: Arguments without the program name.

    Returns:
        RunConfig: The validated configuration.

    Raises:
        ConfigError: Unknown flag, malformed literal or incompatible group and space.
    """
    args = build_parser().parse_args(list(argv))

    try:
        group = GroupId.parse(args.group)
    except LambdaTreesError as error:
        raise ConfigError(str(error)) from error

    if args.check:
        checks = tuple(args.check)
    elif args.space is not None:
        checks = CHECK_NAMES
    else:
        checks = ("condition-a",)

    expectations = tuple(args.expect or ())
    if expectations and len(expectations) != len(checks):
        raise ConfigError(f"--expect given {len(expectations)} times for {len(checks)} checks")

    needs_space = [name for name in checks if name in SPACE_CHECKS]
    if needs_space and args.space is None:
        raise ConfigError(f"--space is required for {', '.join(needs_space)}")

    try:
        CheckConfig(seed=args.seed, samples=args.samples, chain_depth=args.chain_depth)
    except LambdaTreesError as error:
        raise ConfigError(str(error)) from error

    if args.space is not None:
        try:
            parse_space_spec(group, args.space, seed=args.seed)
        except ConfigError:
            raise
        except LambdaTreesError as error:
            raise ConfigError(f"invalid space {args.space}: {error}") from error

    return RunConfig(
        group=group.value,
        space=args.space,
        checks=checks,
        expectations=expectations,
        seed=args.seed,
        samples=args.samples,
        chain_depth=args.chain_depth,
        output_format=OutputFormat(args.format),
        out=args.out,
    )


def exit_status(config: RunConfig, report: RunReport) -> int:
    """
    0 when every check meets its expectation, or without expectations when no check fails.
    """
    if report.error is not None:
        return 1
    if config.expectations:
        matched = all(
            check.status.value == expected for check, expected in zip(report.checks, config.expectations)
        )
        return 0 if matched else 1
    return 1 if any(check.status == CheckStatus.FAIL for check in report.checks) else 0


def run(config: RunConfig, on_check: Optional[Callable[[str], None]] = None) -> RunReport:
    """
    Run the configured checks.

    Args:
        config (RunConfig): The configuration.
        on_check: Called with each check name once it finishes.

    Returns:
        RunReport: The report; construction or check errors land in its error field.
    """
    report = RunReport(config=config)
    cfg = CheckConfig.from_config(seed=config.seed, samples=config.samples, chain_depth=config.chain_depth)

    try:
        space = parse_space_spec(config.group, config.space, seed=config.seed) if config.space is not None else None
        for name in config.checks:
            if name == "condition-a":
                report.checks.append(condition_a_probe(config.group, cfg))
            else:
                report.checks.append(SPACE_CHECKS[name](space, cfg))
            if on_check is not None:
                on_check(name)
    except LambdaTreesError as error:
        LOGGER.error("Run on %s failed: %s", config.space, error)
        report.error = str(error)

    report.exit_status = exit_status(config, report)
    return report


def run_with_progress(config: RunConfig, console: Console) -> RunReport:
    """
    Run the configured checks with a progress display on the given console.
    """
    progress_columns = [
        TextColumn("[bold blue]{task.description}"),
        TextColumn("[progress.percentage]{task.completed}/{task.total}"),
        TaskProgressColumn(),
        TimeElapsedColumn(),
        TimeRemainingColumn(),
    ]
    with Progress(*progress_columns, console=console, transient=True) as progress:
        task = progress.add_task(f"[bold blue]Checking {config.space or config.group}...", total=len(config.checks))
        return run(config, on_check=lambda name: progress.update(task, advance=1, description=name))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the lambda-trees CLI.

    Example:
        lambda-trees --group triadic --space x1:1 --check axiom2 --check axiom3 --expect pass --expect fail

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        int: Exit status; 2 for configuration errors.
    """
    console = Console(stderr=True, highlight=False)
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except ConfigError as error:
        console.print(f"error: {error}", markup=False)
        return 2

    report = run_with_progress(config, console)
    data = emit(report, config.output_format)

    if config.out is not None:
        try:
            config.out.write_bytes(data)
        except OSError as error:
            console.print(f"error: cannot write {config.out}: {error}", markup=False)
            return 2
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()

    return report.exit_status


def entrypoint() -> None:
    """
    Console script entry point.
    """
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
