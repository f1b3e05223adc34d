"""
Polar Manhattan space (0, 2] x [0, 1] over an ordered field, with

    d((t1, phi1), (t2, phi2)) = |t2 - t1| + min(t1, t2) * |phi2 - phi1|

the length of the shortest path made of circular arcs and radial rays. The
segment from the point of smaller radius first walks the arc at that radius,
then the ray out to the other point.
"""

# imports
import random
from typing import Any, Hashable

# project
from lambda_trees.errors import ConfigError, GroupParseError
from lambda_trees.groups import GroupElement, GroupId, get_group, parse_element
from lambda_trees.spaces.base_space import (
    Piece,
    PiecewiseSpace,
    SegmentMap,
    SpaceKind,
    rejection_sample,
)
from lambda_trees.spaces.space_types import X2Point

ARC = "arc"
RAY = "ray"


class X2Space(PiecewiseSpace):
    """
    The polar Manhattan space; requires division, so only the rationals qualify.
    """

    kind = SpaceKind.X2
    point_type = X2Point

    def __init__(self, group: GroupId):
        """
        Initialize the space.

        Args:
            group (GroupId): An ordered field.
        """
        if not get_group(group).is_field:
            raise ConfigError(f"x2 requires an ordered field, {get_group(group).description} is not one")
        super().__init__(group)
        self.one = GroupElement.from_int(self.group, 1)
        self.two = GroupElement.from_int(self.group, 2)

    def describe(self) -> str:
        return "x2"

    def in_domain(self, point: Any) -> bool:
        return (
            point.t.group == self.group
            and point.phi.group == self.group
            and self.zero < point.t <= self.two
            and self.zero <= point.phi <= self.one
        )

    def _distance(self, p: X2Point, q: X2Point) -> GroupElement:
        return abs(q.t - p.t) + min(p.t, q.t) * abs(q.phi - p.phi)

    def _geodesic(self, p: X2Point, q: X2Point) -> SegmentMap:
        flipped = q.t < p.t
        near, far = (q, p) if flipped else (p, q)

        pieces = [
            Piece(
                start=self.zero,
                length=near.t * abs(far.phi - near.phi),
                line=(ARC, near.t),
                origin=near.phi,
                velocity=(self.one if near.phi <= far.phi else -self.one) / near.t,
            ),
            Piece(
                start=self.zero,
                length=far.t - near.t,
                line=(RAY, far.phi),
                origin=near.t,
                velocity=1,
            ),
        ]
        return self._segment(near, far, pieces, flipped=flipped)

    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> X2Point:
        kind, fixed = line
        if kind == ARC:
            return X2Point(fixed, coordinate)
        return X2Point(coordinate, fixed)

    def _line_coordinates(self, line: Hashable, point: X2Point) -> list[GroupElement]:
        kind, fixed = line
        if kind == ARC:
            return [point.phi] if point.t == fixed else []
        return [point.t] if point.phi == fixed else []

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> X2Point:
        return rejection_sample(
            self,
            lambda: X2Point(
                self.random_between(rng, self.zero, self.two, bound, mean_exponent),
                self.random_between(rng, self.zero, self.one, bound, mean_exponent),
            ),
        )

    def probes(self, check: str) -> list[tuple[Any, ...]]:
        half = self.one / 2
        if check == "axiom2":
            # [(1,0),(2,0)] and [(1,0),(2,1)] meet only in (1,0)
            return [
                (
                    X2Point(self.two, self.zero),
                    X2Point(self.one, self.zero),
                    X2Point(self.two, self.one),
                )
            ]
        if check == "axiom3":
            # the constructed y' = (3/4,0) and z' = (1/2,1/2) differ
            return [
                (
                    X2Point(half, self.zero),
                    X2Point(self.one + half, self.zero),
                    X2Point(self.one + half, self.one),
                )
            ]
        return []

    def parse_point(self, text: str) -> X2Point:
        radius, separator, angle = text.strip().partition(",")
        if not separator:
            raise GroupParseError("expected t,phi", text, len(radius))
        return X2Point(parse_element(self.group, radius), parse_element(self.group, angle))

    def format_point(self, point: X2Point) -> str:
        return f"{point.t},{point.phi}"
