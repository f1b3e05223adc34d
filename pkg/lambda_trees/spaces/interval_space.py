"""
Closed Lambda-interval [a, b] with d(t, t') = |t' - t|.
"""

# imports
import random
from typing import Any, Hashable

# project
from lambda_trees.errors import ConfigError
from lambda_trees.groups import GroupElement, GroupId, format_element, parse_element
from lambda_trees.spaces.base_space import Piece, PiecewiseSpace, SegmentMap, SpaceKind

# the single line of an interval
AXIS = "axis"


class IntervalSpace(PiecewiseSpace):
    """
    Closed interval {t : a <= t <= b} of a group.
    """

    kind = SpaceKind.INTERVAL
    point_type = GroupElement

    def __init__(self, group: GroupId, lower: GroupElement, upper: GroupElement):
        """
        Initialize the interval.

        Args:
            group (GroupId): The group.
            lower (GroupElement): Lower endpoint a.
            upper (GroupElement): Upper endpoint b, with a <= b.
        """
        super().__init__(group)
        if lower.group != self.group or upper.group != self.group:
            raise ConfigError(f"interval endpoints must lie in {self.group.value}")
        if upper < lower:
            raise ConfigError(f"interval requires a <= b, got {lower}..{upper}")
        self.lower = lower
        self.upper = upper

    def describe(self) -> str:
        return f"interval:{self.lower}..{self.upper}"

    def in_domain(self, point: Any) -> bool:
        return point.group == self.group and self.lower <= point <= self.upper

    def _distance(self, p: GroupElement, q: GroupElement) -> GroupElement:
        return abs(q - p)

    def _geodesic(self, p: GroupElement, q: GroupElement) -> SegmentMap:
        piece = Piece(
            start=self.zero,
            length=abs(q - p),
            line=AXIS,
            origin=p,
            velocity=1 if p <= q else -1,
        )
        return self._segment(p, q, [piece])

    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> GroupElement:
        return coordinate

    def _line_coordinates(self, line: Hashable, point: GroupElement) -> list[GroupElement]:
        return [point]

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> GroupElement:
        return self.random_between(rng, self.lower, self.upper, bound, mean_exponent)

    def parse_point(self, text: str) -> GroupElement:
        return parse_element(self.group, text)

    def format_point(self, point: GroupElement) -> str:
        return format_element(point)
