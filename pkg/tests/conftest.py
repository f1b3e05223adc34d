"""
Shared fixtures: the built-in spaces in the configurations the independence
results use, and a small sampling configuration.
"""

# packages
import pytest

# project
from lambda_trees.checker import CheckConfig
from lambda_trees.groups import GroupElement, GroupId, parse_element
from lambda_trees.spaces import (
    IntervalSpace,
    L1GridSpace,
    X1Space,
    X2Space,
    X3Space,
    parse_tree_text,
)

STAR_TREE = """
# center c with three unit legs
c u 1
c v 1
c w 1
"""


def element(group: GroupId, text: str) -> GroupElement:
    """
    Shorthand for parsing an element literal in tests.
    """
    return parse_element(group, text)


@pytest.fixture
def star_tree():
    return parse_tree_text(GroupId.RATIONAL, STAR_TREE, name="star")


@pytest.fixture
def x1_triadic():
    return X1Space(GroupId.TRIADIC, element(GroupId.TRIADIC, "1"))


@pytest.fixture
def x2_rational():
    return X2Space(GroupId.RATIONAL)


@pytest.fixture
def x3_int():
    return X3Space(GroupId.INT, element(GroupId.INT, "1"))


@pytest.fixture
def l1grid_int():
    return L1GridSpace(GroupId.INT, element(GroupId.INT, "1"))


@pytest.fixture
def interval_int():
    return IntervalSpace(GroupId.INT, element(GroupId.INT, "0"), element(GroupId.INT, "5"))


@pytest.fixture
def small_config():
    return CheckConfig(seed=0, samples=300, chain_depth=20)


@pytest.fixture
def all_spaces(star_tree, x1_triadic, x2_rational, x3_int, l1grid_int, interval_int):
    return {
        "tree": star_tree,
        "x1": x1_triadic,
        "x2": x2_rational,
        "x3": x3_int,
        "l1grid": l1grid_int,
        "interval": interval_int,
    }
