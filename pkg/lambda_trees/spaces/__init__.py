"""
Built-in Lambda-metric spaces with exact distances, segment maps and
intersection descriptors.
"""

# project
from lambda_trees.spaces.base_space import (
    BaseSpace,
    ChainSeed,
    IntersectionDescriptor,
    IntersectionKind,
    Piece,
    PiecewiseSpace,
    SegmentMap,
    SpaceKind,
)
from lambda_trees.spaces.interval_space import IntervalSpace
from lambda_trees.spaces.l1grid_space import L1GridSpace
from lambda_trees.spaces.space_factory import (
    get_space,
    parse_space_spec,
    parse_tree_file,
    parse_tree_text,
    random_tree,
)
from lambda_trees.spaces.space_types import GridPoint, TreeEdge, TreePoint, X1Point, X2Point
from lambda_trees.spaces.tree_space import TreeSpace
from lambda_trees.spaces.x1_space import X1Space
from lambda_trees.spaces.x2_space import X2Space
from lambda_trees.spaces.x3_space import X3Space

__all__ = [
    "BaseSpace",
    "ChainSeed",
    "IntersectionDescriptor",
    "IntersectionKind",
    "Piece",
    "PiecewiseSpace",
    "SegmentMap",
    "SpaceKind",
    "IntervalSpace",
    "L1GridSpace",
    "TreeSpace",
    "X1Space",
    "X2Space",
    "X3Space",
    "GridPoint",
    "TreeEdge",
    "TreePoint",
    "X1Point",
    "X2Point",
    "get_space",
    "parse_space_spec",
    "parse_tree_file",
    "parse_tree_text",
    "random_tree",
]
