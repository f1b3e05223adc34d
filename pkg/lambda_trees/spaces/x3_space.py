"""
Circle of circumference 3a, X3 = [0, 3a] / (0 ~ 3a), with

    d(p, q) = min{|q - p + k * 3a| : k in Z}

For an a outside 2 * group no two points are antipodal, so segments are unique,
but [0, a] and [a, 2a] meet only in a while d(0, 2a) = a.
"""

# imports
import random
from typing import Any, Hashable

# project
from lambda_trees.errors import ConfigError, DomainError
from lambda_trees.groups import (
    GroupElement,
    GroupId,
    floor_quotient,
    format_element,
    parse_element,
    try_halve,
)
from lambda_trees.spaces.base_space import Piece, PiecewiseSpace, SegmentMap, SpaceKind

CIRCLE = "circle"


class X3Space(PiecewiseSpace):
    """
    The circle of circumference 3a; points are representatives in [0, 3a).
    """

    kind = SpaceKind.X3
    point_type = GroupElement

    def __init__(self, group: GroupId, a: GroupElement):
        """
        Initialize the circle.

        Args:
            group (GroupId): The group.
            a (GroupElement): Positive element with try_halve(a) = none.
        """
        super().__init__(group)
        if a.group != self.group or a.sign <= 0:
            raise ConfigError(f"x3 requires a positive a in {self.group.value}, got {a}")
        if try_halve(a) is not None:
            raise ConfigError(f"x3 requires an a with try_halve(a) = none, but {a} = 2 * {try_halve(a)}")
        self.a = a
        self.circumference = a * 3

    def describe(self) -> str:
        return f"x3:{self.a}"

    def in_domain(self, point: Any) -> bool:
        return point.group == self.group and self.zero <= point < self.circumference

    def canonical(self, value: GroupElement) -> GroupElement:
        """
        Representative of a value in [0, 3a).
        """
        turns = floor_quotient(value, self.circumference)
        if turns is None:
            raise DomainError(f"{value} has no representative in [0, {self.circumference})")
        return value - self.circumference * turns

    def forward_gap(self, p: GroupElement, q: GroupElement) -> GroupElement:
        """
        Length of the arc from p to q in the increasing direction.
        """
        return self.canonical(q - p)

    def _distance(self, p: GroupElement, q: GroupElement) -> GroupElement:
        gap = self.forward_gap(p, q)
        return min(gap, self.circumference - gap)

    def _geodesic(self, p: GroupElement, q: GroupElement) -> SegmentMap:
        gap = self.forward_gap(p, q)
        if gap.is_zero():
            return self._segment(p, q, [])

        # 2 * gap = 3a is impossible since 3a is not in 2 * group
        if gap < self.circumference - gap:
            length, direction = gap, 1
            first = min(length, self.circumference - p)
            pieces = [
                Piece(self.zero, first, CIRCLE, p, direction),
                Piece(self.zero, length - first, CIRCLE, self.zero, direction),
            ]
        else:
            length, direction = self.circumference - gap, -1
            origin = p if p.sign > 0 else self.circumference
            first = min(length, origin)
            pieces = [
                Piece(self.zero, first, CIRCLE, origin, direction),
                Piece(self.zero, length - first, CIRCLE, self.circumference, direction),
            ]
        return self._segment(p, q, pieces)

    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> GroupElement:
        return self.canonical(coordinate)

    def _line_coordinates(self, line: Hashable, point: GroupElement) -> list[GroupElement]:
        return [point, point + self.circumference]

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> GroupElement:
        value = self.random_between(rng, self.zero, self.circumference, bound, mean_exponent)
        return self.canonical(value)

    def probes(self, check: str) -> list[tuple[Any, ...]]:
        if check == "axiom2":
            # [0, a] and [a, 2a]
            return [(self.zero, self.a, self.a * 2)]
        return []

    def parse_point(self, text: str) -> GroupElement:
        return self.canonical(parse_element(self.group, text))

    def format_point(self, point: GroupElement) -> str:
        return format_element(point)
