"""
Three copies of I = {x : 0 <= 2x <= lambda0}, glued only through the metric

    d((x, i), (y, j)) = |x - y|        if i = j
                      = lambda0 - x - y  if i != j

For a lambda0 whose half-set I has no maximum this space is geodesic, uniquely
geodesic and satisfies the union axiom, but two segments from (0, 1) towards
different branches intersect in I x {1}, which is not a segment.
"""

# imports
import random
from enum import Enum
from typing import Any

# project
from lambda_trees.errors import ConfigError, GroupParseError
from lambda_trees.groups import GroupElement, GroupId, max_half, parse_element
from lambda_trees.spaces.base_space import (
    BaseSpace,
    ChainSeed,
    IntersectionDescriptor,
    IntersectionKind,
    SegmentMap,
    SpaceKind,
    rejection_sample,
)
from lambda_trees.spaces.space_types import X1Point

BRANCHES = (1, 2, 3)


class Route(Enum):
    """
    How a segment leaves its start (x, i).
    """

    STAY = "stay"
    DOWN = "down"
    UP = "up"
    THROUGH = "through"


class X1Space(BaseSpace):
    """
    The three-branch space over a lambda0 with no half-maximum.
    """

    kind = SpaceKind.X1
    point_type = X1Point

    def __init__(self, group: GroupId, lambda0: GroupElement):
        """
        Initialize the space.

        Args:
            group (GroupId): The group.
            lambda0 (GroupElement): Positive element with max_half(lambda0) = none.
        """
        super().__init__(group)
        if lambda0.group != self.group or lambda0.sign <= 0:
            raise ConfigError(f"x1 requires a positive lambda0 in {self.group.value}, got {lambda0}")
        result = max_half(lambda0)
        if result.exists:
            note = (
                f" (max_half exists for every λ0 in {lambda0.impl.description})"
                if lambda0.impl.always_half_maximal
                else ""
            )
            raise ConfigError(
                f"x1 requires a λ0 with no half-maximum: max_half({lambda0}) = {result.maximum}{note}"
            )
        self.lambda0 = lambda0

    def describe(self) -> str:
        return f"x1:{self.lambda0}"

    def in_domain(self, point: Any) -> bool:
        return (
            point.branch in BRANCHES
            and point.x.group == self.group
            and point.x.sign >= 0
            and point.x * 2 <= self.lambda0
        )

    def _distance(self, p: X1Point, q: X1Point) -> GroupElement:
        if p.branch == q.branch:
            return abs(q.x - p.x)
        return self.lambda0 - p.x - q.x

    def _geodesic(self, p: X1Point, q: X1Point) -> SegmentMap:
        # same branch runs upwards from the smaller coordinate
        flipped = p.branch == q.branch and q.x < p.x
        return SegmentMap(
            space=self,
            start=p,
            end=q,
            length=self._distance(p, q),
            flipped=flipped,
        )

    def _eval_forward(self, seg: SegmentMap, t: GroupElement) -> X1Point:
        origin, terminus = seg.forward_origin, seg.forward_terminus
        reached = origin.x + t
        if origin.branch == terminus.branch:
            return X1Point(reached, origin.branch)
        # 2(x + t) = lambda0 would put lambda0 in 2 * group
        assert reached * 2 != self.lambda0, "lambda0 is halvable"
        if reached * 2 < self.lambda0:
            return X1Point(reached, origin.branch)
        return X1Point(self.lambda0 - reached, terminus.branch)

    def _contains(self, seg: SegmentMap, point: X1Point) -> bool:
        origin, terminus = seg.forward_origin, seg.forward_terminus
        if origin.branch == terminus.branch:
            return point.branch == origin.branch and origin.x <= point.x <= terminus.x
        return (point.branch == origin.branch and point.x >= origin.x) or (
            point.branch == terminus.branch and point.x >= terminus.x
        )

    @staticmethod
    def route(start: X1Point, end: X1Point) -> Route:
        """
        Classify how the segment from start to end leaves start.
        """
        if start.branch != end.branch:
            return Route.THROUGH
        if end.x == start.x:
            return Route.STAY
        return Route.UP if end.x > start.x else Route.DOWN

    def _intersect_from(self, s1: SegmentMap, s2: SegmentMap, x: X1Point) -> IntersectionDescriptor:
        y1 = s1.end if s1.start == x else s1.start
        y2 = s2.end if s2.start == x else s2.start
        route1, route2 = self.route(x, y1), self.route(x, y2)
        routes = {route1, route2}

        # order the pair so that the first route is the more restricted one
        if route1 == Route.THROUGH and route2 == Route.UP:
            y1, y2, route1, route2 = y2, y1, route2, route1

        if Route.STAY in routes or (Route.DOWN in routes and routes != {Route.DOWN}):
            w = x
        elif routes == {Route.DOWN}:
            w = X1Point(max(y1.x, y2.x), x.branch)
        elif routes == {Route.UP}:
            w = X1Point(min(y1.x, y2.x), x.branch)
        elif route1 == Route.UP:
            w = y1
        elif y1.branch == y2.branch:
            w = X1Point(max(y1.x, y2.x), y1.branch)
        else:
            # both run through branch i and part on different branches: the
            # common part is {(u, i) : u >= x}, which has no last point
            return IntersectionDescriptor(
                kind=IntersectionKind.NO_MAX_SET,
                endpoint=x,
                common=self.zero,
                chain_seed=ChainSeed(lambda0=self.lambda0, floor=x.x, branch=x.branch),
            )

        if w == x:
            return IntersectionDescriptor(kind=IntersectionKind.DISJOINT_BEYOND, endpoint=x, common=self.zero)
        return IntersectionDescriptor(kind=IntersectionKind.SEGMENT, endpoint=w, common=self._distance(x, w))

    def _join(self, s1: SegmentMap, s2: SegmentMap) -> SegmentMap:
        return self._geodesic(s1.start, s2.end)

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> X1Point:
        return rejection_sample(
            self,
            lambda: X1Point(
                self.random_between(rng, self.zero, self.lambda0, bound, mean_exponent),
                rng.choice(BRANCHES),
            ),
        )

    def probes(self, check: str) -> list[tuple[Any, ...]]:
        if check == "axiom3":
            return [(X1Point(self.zero, 1), X1Point(self.zero, 2), X1Point(self.zero, 3))]
        return []

    def parse_point(self, text: str) -> X1Point:
        value, separator, branch = text.strip().rpartition("@")
        if not separator or branch not in ("1", "2", "3"):
            raise GroupParseError("expected x@i with i in 1..3", text, len(value) + len(separator))
        return X1Point(parse_element(self.group, value), int(branch))

    def format_point(self, point: X1Point) -> str:
        return f"{point.x}@{point.branch}"
