"""
Run configuration and run report types, with canonical JSON and text emitters.
"""

# future imports
from __future__ import annotations

# imports
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Optional

# project
from lambda_trees import __version__
from lambda_trees.checker import CheckReport, CheckStatus

REPORT_VERSION = 1


class OutputFormat(str, Enum):
    """
    Report serialization format.
    """

    JSON = "json"
    TEXT = "text"


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class RunConfig:
    """
    Validated command-line configuration.
    """

    group: str
    space: Optional[str]
    checks: tuple[str, ...]
    # empty, or one expectation per check
    expectations: tuple[str, ...] = ()
    seed: int = 0
    samples: int = 1000
    chain_depth: int = 20
    output_format: OutputFormat = OutputFormat.JSON
    out: Optional[Path] = None

    def to_dict(self) -> dict[str, Any]:
        """
        JSON echo of the configuration; the output path is left out so that
        stdout and file reports carry the same bytes.
        """
        return {
            "group": self.group,
            "space": self.space,
            "checks": list(self.checks),
            "expectations": list(self.expectations),
            "seed": self.seed,
            "samples": self.samples,
            "chain_depth": self.chain_depth,
            "format": self.output_format.value,
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> RunConfig:
        """
        Rebuild a configuration from its JSON echo.
        """
        return RunConfig(
            group=data["group"],
            space=data["space"],
            checks=tuple(data["checks"]),
            expectations=tuple(data.get("expectations", ())),
            seed=data["seed"],
            samples=data["samples"],
            chain_depth=data["chain_depth"],
            output_format=OutputFormat(data.get("format", "json")),
        )


@dataclass
class RunReport:
    """
    Outcome of a run: the configuration echo, one report per check, and the exit status.
    """

    config: RunConfig
    checks: list[CheckReport] = field(default_factory=list)
    exit_status: int = 0
    error: Optional[str] = None
    version: int = REPORT_VERSION
    tool_version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        """
        JSON-ready form.
        """
        return {
            "version": self.version,
            "tool_version": self.tool_version,
            "config": self.config.to_dict(),
            "checks": [report.to_dict() for report in self.checks],
            "exit_status": self.exit_status,
            "error": self.error,
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> RunReport:
        """
        Rebuild a report from its JSON form.
        """
        return RunReport(
            config=RunConfig.from_dict(data["config"]),
            checks=[CheckReport.from_dict(item) for item in data["checks"]],
            exit_status=data["exit_status"],
            error=data.get("error"),
            version=data["version"],
            tool_version=data["tool_version"],
        )


def _summarize_witness(witness: dict[str, Any]) -> str:
    """
    One-line witness summary with exact literals.
    """
    parts = [str(witness.get("relation", "?"))]
    if "lambda0" in witness:
        parts.append(f"λ0={witness['lambda0']}")
    points = witness.get("points", {})
    if points:
        parts.append(" ".join(f"{name}={literal}" for name, literal in points.items()))
    parameters = witness.get("parameters", {})
    if parameters:
        parts.append(" ".join(f"{name}={literal}" for name, literal in parameters.items()))
    if "lhs" in witness:
        parts.append(f"lhs={witness['lhs']} rhs={witness['rhs']}")
    chain = witness.get("chain")
    if chain:
        parts.append(f"chain({chain['lambda0']})=[{'; '.join(chain['elements'])}]")
    return "; ".join(parts)


def _text_line(report: CheckReport) -> str:
    line = f"{report.name:<12} {report.status.value.upper():<4} samples={report.samples} seed={report.seed}"
    if report.space is not None:
        line += f" space={report.space}"
    if report.status == CheckStatus.FAIL and report.witness is not None:
        line += f" witness: {_summarize_witness(report.witness)}"
    elif report.status == CheckStatus.SKIP and report.note:
        line += f" ({report.note})"
    return line


def emit(report: RunReport, output_format: OutputFormat | str = OutputFormat.JSON) -> bytes:
    """
    Serialize a run report.

    Args:
        report (RunReport): The report.
        output_format: "json" for the full structure with sorted keys, "text" for one line per check.

    Returns:
        bytes: UTF-8 encoded report ending in a newline.
    """
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.JSON:
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n").encode("utf-8")

    lines = [f"lambda-trees {report.tool_version} group={report.config.group} space={report.config.space}"]
    lines.extend(_text_line(check) for check in report.checks)
    if report.error is not None:
        lines.append(f"error: {report.error}")
    lines.append(f"exit status {report.exit_status}")
    return ("\n".join(lines) + "\n").encode("utf-8")
