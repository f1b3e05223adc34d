"""
Types shared by the axiom checks: configuration, outcome status, reports and
witness chains.
"""

# future imports
from __future__ import annotations

# imports
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

# project
from lambda_trees.config import CONFIG
from lambda_trees.errors import PreconditionError
from lambda_trees.groups import GroupElement, GroupId, max_half, parse_element


class CheckStatus(Enum):
    """
    Outcome of a check:
    - PASS: no counterexample among the samples (evidence)
    - FAIL: a verified counterexample (certificate)
    - SKIP: a precondition of the check did not hold
    """

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class CheckConfig:
    """
    Sampling configuration of a check run.
    """

    seed: int = 0
    samples: int = 1000
    chain_depth: int = 20
    # None selects the per-group default
    numerator_bound: Optional[int] = None
    mean_exponent: int = 3
    # (t, t') parameter pairs checked per segment
    parameter_pairs: int = 2

    def __post_init__(self):
        if self.samples < 1:
            raise PreconditionError(f"samples must be >= 1, got {self.samples}")
        if self.chain_depth < 1:
            raise PreconditionError(f"chain_depth must be >= 1, got {self.chain_depth}")

    @staticmethod
    def from_config(**overrides: Any) -> CheckConfig:
        """
        Build a CheckConfig from the package configuration, with overrides.

        Returns:
            CheckConfig: The configuration.
        """
        values = {
            "seed": CONFIG.default_seed,
            "samples": CONFIG.default_samples,
            "chain_depth": CONFIG.default_chain_depth,
            "mean_exponent": CONFIG.default_mean_exponent,
            "parameter_pairs": CONFIG.default_parameter_pairs,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return CheckConfig(**values)

    def bound_for(self, group: GroupId) -> int:
        """
        Numerator bound for a group.
        """
        if self.numerator_bound is not None:
            return self.numerator_bound
        if group == GroupId.TRIADIC:
            return CONFIG.default_triadic_numerator_bound
        return CONFIG.default_numerator_bound


@dataclass(frozen=True)
class WitnessChain:
    """
    Strictly increasing t_1 < ... < t_n inside S = {t : 0 <= 2t <= lambda0},
    certifying that S (or its part above `floor`) has no maximum.
    """

    lambda0: GroupElement
    elements: tuple[GroupElement, ...]
    floor: Optional[GroupElement] = None

    def verify(self) -> bool:
        """
        Re-check monotonicity, membership in S, the floor, and that S has no maximum.

        Returns:
            bool: Whether every property holds.
        """
        if max_half(self.lambda0).exists:
            return False
        floor = self.floor if self.floor is not None else GroupElement.zero(self.lambda0.group)
        for index, element in enumerate(self.elements):
            if element < floor or element.sign < 0 or element * 2 > self.lambda0:
                return False
            if index and not self.elements[index - 1] < element:
                return False
        return True

    def to_dict(self) -> dict[str, Any]:
        """
        JSON-ready form with element literals.
        """
        return {
            "lambda0": str(self.lambda0),
            "floor": None if self.floor is None else str(self.floor),
            "elements": [str(element) for element in self.elements],
        }

    @staticmethod
    def from_dict(group: GroupId, data: dict[str, Any]) -> WitnessChain:
        """
        Rebuild a chain from its JSON form.
        """
        return WitnessChain(
            lambda0=parse_element(group, data["lambda0"]),
            elements=tuple(parse_element(group, text) for text in data["elements"]),
            floor=None if data.get("floor") is None else parse_element(group, data["floor"]),
        )


@dataclass
class CheckReport:
    """
    Outcome of one check suite.
    """

    name: str
    space: Optional[str]
    group: str
    status: CheckStatus
    samples: int
    seed: int
    witness: Optional[dict[str, Any]] = None
    note: Optional[str] = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> Optional[bool]:
        """
        True for PASS, False for FAIL, None for SKIP.
        """
        if self.status == CheckStatus.SKIP:
            return None
        return self.status == CheckStatus.PASS

    def to_dict(self) -> dict[str, Any]:
        """
        JSON-ready form.
        """
        return {
            "name": self.name,
            "space": self.space,
            "group": self.group,
            "pass": self.passed,
            "status": self.status.value,
            "samples": self.samples,
            "seed": self.seed,
            "witness": self.witness,
            "note": self.note,
            "extra": self.extra,
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> CheckReport:
        """
        Rebuild a report from its JSON form.
        """
        return CheckReport(
            name=data["name"],
            space=data["space"],
            group=data["group"],
            status=CheckStatus(data["status"]),
            samples=data["samples"],
            seed=data["seed"],
            witness=data.get("witness"),
            note=data.get("note"),
            extra=data.get("extra", {}),
        )
