"""
Seeded axiom checks with exact failure certificates.
"""

# project
from lambda_trees.checker.axiom_checks import (
    CHECK_NAMES,
    SPACE_CHECKS,
    check_axiom1,
    check_axiom2,
    check_axiom3,
    check_fork,
    check_metric,
    check_unique,
    condition_a_probe,
)
from lambda_trees.checker.check_types import CheckConfig, CheckReport, CheckStatus, WitnessChain
from lambda_trees.checker.construction import Axiom3Trace, axiom3_construction
from lambda_trees.checker.witness import chain_from_seed, no_max_witness, reverify_witness

__all__ = [
    "CHECK_NAMES",
    "SPACE_CHECKS",
    "Axiom3Trace",
    "CheckConfig",
    "CheckReport",
    "CheckStatus",
    "WitnessChain",
    "axiom3_construction",
    "chain_from_seed",
    "check_axiom1",
    "check_axiom2",
    "check_axiom3",
    "check_fork",
    "check_metric",
    "check_unique",
    "condition_a_probe",
    "no_max_witness",
    "reverify_witness",
]
