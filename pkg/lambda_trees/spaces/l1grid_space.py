"""
Square [0, side]^2 with the l1 metric. Many monotone staircases join two points,
so the space is geodesic but not uniquely geodesic; geodesic() returns the
staircase that moves along the first axis first.
"""

# imports
import random
from typing import Any, Hashable

# project
from lambda_trees.errors import ConfigError, GroupParseError
from lambda_trees.groups import GroupElement, GroupId, parse_element
from lambda_trees.spaces.base_space import Piece, PiecewiseSpace, SegmentMap, SpaceKind
from lambda_trees.spaces.space_types import GridPoint

ROW = "row"
COLUMN = "column"


class L1GridSpace(PiecewiseSpace):
    """
    The l1 square, kept as a space that must fail the uniqueness check.
    """

    kind = SpaceKind.L1GRID
    point_type = GridPoint

    def __init__(self, group: GroupId, side: GroupElement):
        super().__init__(group)
        if side.group != self.group or side.sign <= 0:
            raise ConfigError(f"l1grid requires a positive side in {self.group.value}, got {side}")
        self.side = side

    def describe(self) -> str:
        return f"l1grid:{self.side}"

    def in_domain(self, point: Any) -> bool:
        return all(
            value.group == self.group and self.zero <= value <= self.side for value in (point.u, point.w)
        )

    def _distance(self, p: GridPoint, q: GridPoint) -> GroupElement:
        return abs(q.u - p.u) + abs(q.w - p.w)

    def _geodesic(self, p: GridPoint, q: GridPoint) -> SegmentMap:
        pieces = [
            Piece(self.zero, abs(q.u - p.u), (ROW, p.w), p.u, 1 if p.u <= q.u else -1),
            Piece(self.zero, abs(q.w - p.w), (COLUMN, q.u), p.w, 1 if p.w <= q.w else -1),
        ]
        return self._segment(p, q, pieces)

    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> GridPoint:
        kind, fixed = line
        return GridPoint(coordinate, fixed) if kind == ROW else GridPoint(fixed, coordinate)

    def _line_coordinates(self, line: Hashable, point: GridPoint) -> list[GroupElement]:
        kind, fixed = line
        if kind == ROW:
            return [point.u] if point.w == fixed else []
        return [point.w] if point.u == fixed else []

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> GridPoint:
        return GridPoint(
            self.random_between(rng, self.zero, self.side, bound, mean_exponent),
            self.random_between(rng, self.zero, self.side, bound, mean_exponent),
        )

    def probes(self, check: str) -> list[tuple[Any, ...]]:
        if check == "unique":
            # the corner (0, side) lies on the other staircase from (0,0) to (side,side)
            return [
                (
                    GridPoint(self.zero, self.zero),
                    GridPoint(self.side, self.side),
                    GridPoint(self.zero, self.side),
                )
            ]
        return []

    def parse_point(self, text: str) -> GridPoint:
        first, separator, second = text.strip().partition(";")
        if not separator:
            raise GroupParseError("expected u;w", text, len(first))
        return GridPoint(parse_element(self.group, first), parse_element(self.group, second))

    def format_point(self, point: GridPoint) -> str:
        return f"{point.u};{point.w}"
