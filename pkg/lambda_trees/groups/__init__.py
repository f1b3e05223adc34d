"""
Exact ordered abelian groups and the half-maximum decision procedure.
"""

# project
from lambda_trees.groups.base_group import (
    BaseGroup,
    GroupElement,
    GroupId,
    HalfMaxResult,
    Ordering,
    add,
    compare,
    floor_quotient,
    get_group,
    iter_half_chain,
    max_half,
    random_between,
    random_element,
    try_halve,
)
from lambda_trees.groups.fractional_groups import (
    DyadicGroup,
    IntegerGroup,
    RationalGroup,
    TriadicGroup,
)
from lambda_trees.groups.group_codec import format_element, parse_element
from lambda_trees.groups.lexicographic_group import LexIntGroup
from lambda_trees.groups.quadratic_group import Zsqrt2Group

__all__ = [
    "BaseGroup",
    "GroupElement",
    "GroupId",
    "HalfMaxResult",
    "Ordering",
    "add",
    "compare",
    "floor_quotient",
    "get_group",
    "iter_half_chain",
    "max_half",
    "random_between",
    "random_element",
    "try_halve",
    "parse_element",
    "format_element",
    "IntegerGroup",
    "RationalGroup",
    "DyadicGroup",
    "TriadicGroup",
    "Zsqrt2Group",
    "LexIntGroup",
]
