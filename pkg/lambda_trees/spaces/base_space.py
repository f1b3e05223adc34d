"""
Base space to standardize distances, segment maps, membership and intersection
descriptors for all concrete Lambda-metric spaces.
"""

# future imports
from __future__ import annotations

# imports
import abc
import dataclasses
import random
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Any, Callable, Hashable, Optional

# project
from lambda_trees.config import CONFIG
from lambda_trees.errors import DomainError, PreconditionError, RangeError
from lambda_trees.groups import GroupElement, GroupId, get_group, random_between
from lambda_trees.utils.random_utils import derive_rng

# attempts at drawing a point inside the domain before giving up
MAX_REJECTION_ATTEMPTS = 256


class SpaceKind(str, Enum):
    """
    Kinds of built-in spaces.
    """

    INTERVAL = "interval"
    TREE = "tree"
    X1 = "x1"
    X2 = "x2"
    X3 = "x3"
    L1GRID = "l1grid"


class IntersectionKind(Enum):
    """
    Shape of the intersection of two segments at a common endpoint x:
    - a segment [x, w] with w != x
    - an increasing union with no last point
    - the single point {x}
    """

    SEGMENT = auto()
    NO_MAX_SET = auto()
    DISJOINT_BEYOND = auto()


@dataclass(frozen=True)
class ChainSeed:
    """
    Data needed to generate a witness chain for an intersection without a last point:
    the points (t, branch) with floor <= t and 0 <= 2t <= lambda0.
    """

    lambda0: GroupElement
    floor: GroupElement
    branch: int


@dataclass(frozen=True)
class IntersectionDescriptor:
    """
    Closed-form description of s1 ∩ s2 for two segments sharing the endpoint x.
    """

    kind: IntersectionKind
    # x for DISJOINT_BEYOND and NO_MAX_SET, the far endpoint w for SEGMENT
    endpoint: Any
    # length of the common initial part
    common: GroupElement
    chain_seed: Optional[ChainSeed] = None

    @property
    def is_point(self) -> bool:
        """
        Whether the intersection is exactly {x}.
        """
        return self.kind == IntersectionKind.DISJOINT_BEYOND

    @property
    def is_segment(self) -> bool:
        """
        Whether the intersection is a segment (possibly the single point {x}).
        """
        return self.kind != IntersectionKind.NO_MAX_SET


@dataclass(frozen=True)
class Piece:
    """
    One linear piece of a segment map: parameters [start, start + length] travel
    along `line` from coordinate `origin` at `velocity` coordinate units per unit
    of parameter.
    """

    start: GroupElement
    length: GroupElement
    line: Hashable
    origin: GroupElement
    velocity: int | GroupElement

    def coordinate(self, offset: GroupElement) -> GroupElement:
        """
        Line coordinate at `offset` parameter units into the piece.
        """
        return self.origin + offset * self.velocity

    @property
    def terminus(self) -> GroupElement:
        """
        Line coordinate at the end of the piece.
        """
        return self.coordinate(self.length)


@dataclass(frozen=True)
class SegmentMap:
    """
    A parametrized segment [0, length] -> X from `start` to `end`.

    Pieces describe the forward map built from the forward origin; `flipped` marks
    a segment that runs backwards along its pieces, so eval(t) reads the pieces at
    length - t.
    """

    space: BaseSpace = field(compare=False, repr=False)
    start: Any
    end: Any
    length: GroupElement
    pieces: tuple[Piece, ...] = ()
    flipped: bool = False

    @property
    def forward_origin(self) -> Any:
        """
        The endpoint the pieces start from.
        """
        return self.end if self.flipped else self.start

    @property
    def forward_terminus(self) -> Any:
        """
        The endpoint the pieces end at.
        """
        return self.start if self.flipped else self.end

    def eval(self, t: GroupElement) -> Any:
        """
        Point at parameter t.
        """
        return self.space.eval_segment(self, t)

    def reverse(self) -> SegmentMap:
        """
        The same segment traversed from end to start.
        """
        return self.space.reverse(self)

    def contains(self, point: Any) -> bool:
        """
        Whether the point lies on the segment.
        """
        return self.space.contains(self, point)


class BaseSpace(abc.ABC):
    """
    Base space to standardize the Lambda-metric interface for all built-in spaces.
    """

    kind: SpaceKind
    point_type: type

    def __init__(self, group: GroupId):
        """
        Initialize the space.

        Args:
            group (GroupId): The group the distances take values in.
        """
        self.group = get_group(group).group_id
        self.zero = GroupElement.zero(self.group)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.describe()})"

    @abc.abstractmethod
    def describe(self) -> str:
        """
        Space description in the command-line syntax, e.g. "x1:1".
        """

    @abc.abstractmethod
    def in_domain(self, point: Any) -> bool:
        """
        Whether a value of the right point type satisfies the domain constraints.
        """

    @abc.abstractmethod
    def _distance(self, p: Any, q: Any) -> GroupElement:
        """
        Distance between two checked points.
        """

    @abc.abstractmethod
    def _geodesic(self, p: Any, q: Any) -> SegmentMap:
        """
        Canonical segment between two checked points.
        """

    @abc.abstractmethod
    def _eval_forward(self, seg: SegmentMap, t: GroupElement) -> Any:
        """
        Point at parameter t of the forward map.
        """

    @abc.abstractmethod
    def _contains(self, seg: SegmentMap, point: Any) -> bool:
        """
        Decide membership of a checked point.
        """

    @abc.abstractmethod
    def _intersect_from(self, s1: SegmentMap, s2: SegmentMap, x: Any) -> IntersectionDescriptor:
        """
        Intersection of two segments that both have x as an endpoint.
        """

    @abc.abstractmethod
    def _join(self, s1: SegmentMap, s2: SegmentMap) -> SegmentMap:
        """
        Segment map of s1 followed by s2, known to be isometric.
        """

    @abc.abstractmethod
    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> Any:
        """
        Draw one point of the space.
        """

    @abc.abstractmethod
    def parse_point(self, text: str) -> Any:
        """
        Parse a point literal.
        """

    @abc.abstractmethod
    def format_point(self, point: Any) -> str:
        """
        Canonical point literal.
        """

    def probes(self, check: str) -> list[tuple[Any, ...]]:
        """
        Canonical inputs evaluated before random samples for a check.

        Args:
            check (str): The check name.

        Returns:
            list[tuple]: Point tuples in the shape the check samples.
        """
        return []

    def check_point(self, point: Any) -> None:
        """
        Raise DomainError for a point that does not belong to the space.
        """
        if not isinstance(point, self.point_type) or not self.in_domain(point):
            raise DomainError(f"{point!r} is not a point of {self.describe()}")

    def check_segment(self, seg: SegmentMap) -> None:
        """
        Raise DomainError for a segment of another space.
        """
        if seg.space is not self:
            raise DomainError(f"segment of {seg.space.describe()} used with {self.describe()}")

    def distance(self, p: Any, q: Any) -> GroupElement:
        """
        Exact distance d(p, q).

        Args:
            p: First point.
            q: Second point.

        Returns:
            GroupElement: The distance.
        """
        self.check_point(p)
        self.check_point(q)
        return self._distance(p, q)

    def geodesic(self, p: Any, q: Any) -> SegmentMap:
        """
        Segment map from p to q of length d(p, q).

        Args:
            p: Start point.
            q: End point.

        Returns:
            SegmentMap: The canonical segment.
        """
        self.check_point(p)
        self.check_point(q)
        return self._geodesic(p, q)

    def eval_segment(self, seg: SegmentMap, t: GroupElement) -> Any:
        """
        Point of a segment at parameter t in [0, D].

        Args:
            seg (SegmentMap): The segment.
            t (GroupElement): The parameter.

        Returns:
            The point.
        """
        self.check_segment(seg)
        if t < self.zero or t > seg.length:
            raise RangeError(f"parameter {t} outside [0, {seg.length}]")
        if seg.length.is_zero():
            return seg.start
        return self._eval_forward(seg, seg.length - t if seg.flipped else t)

    def reverse(self, seg: SegmentMap) -> SegmentMap:
        """
        The segment with endpoints swapped, so that eval(reverse(s), t) = eval(s, D - t).
        """
        self.check_segment(seg)
        return dataclasses.replace(seg, start=seg.end, end=seg.start, flipped=not seg.flipped)

    def concat(self, s1: SegmentMap, s2: SegmentMap) -> Optional[SegmentMap]:
        """
        Concatenate two segments meeting at end(s1) = start(s2).

        Args:
            s1 (SegmentMap): First segment.
            s2 (SegmentMap): Second segment.

        Returns:
            Optional[SegmentMap]: The union as a segment when it is isometric, else None.
        """
        self.check_segment(s1)
        self.check_segment(s2)
        if s1.end != s2.start:
            raise PreconditionError(
                f"cannot concatenate: end {self.format_point(s1.end)} != start {self.format_point(s2.start)}"
            )
        if self._distance(s1.start, s2.end) != s1.length + s2.length:
            return None
        return self._join(s1, s2)

    def contains(self, seg: SegmentMap, point: Any) -> bool:
        """
        Whether point = eval(seg, t) for some t in [0, D], decided in closed form.
        """
        self.check_segment(seg)
        self.check_point(point)
        return self._contains(seg, point)

    def intersect_at_common_endpoint(self, s1: SegmentMap, s2: SegmentMap, x: Any) -> IntersectionDescriptor:
        """
        Describe s1 ∩ s2 for two segments that share the endpoint x.

        Args:
            s1 (SegmentMap): First segment.
            s2 (SegmentMap): Second segment.
            x: A common endpoint.

        Returns:
            IntersectionDescriptor: The intersection shape.
        """
        self.check_segment(s1)
        self.check_segment(s2)
        self.check_point(x)
        for seg in (s1, s2):
            if x not in (seg.start, seg.end):
                raise PreconditionError(f"{self.format_point(x)} is not an endpoint of both segments")
        return self._intersect_from(s1, s2, x)

    def point_from(self, seg: SegmentMap, x: Any, distance: GroupElement) -> Any:
        """
        Point of a segment at the given distance from its endpoint x.
        """
        return self.eval_segment(seg, distance if x == seg.start else seg.length - distance)

    def random_between(
        self, rng: random.Random, lo: GroupElement, hi: GroupElement, bound: int, mean_exponent: int
    ) -> GroupElement:
        """
        Draw an element of [lo, hi] in the space's group.
        """
        return random_between(rng, lo, hi, bound, mean_exponent)

    def sample(
        self,
        seed: int,
        n: int,
        bound: Optional[int] = None,
        mean_exponent: Optional[int] = None,
    ) -> list[Any]:
        """
        Draw n points, deterministically in (space, seed, n).

        Args:
            seed (int): Seed.
            n (int): Number of points.
            bound (int): Numerator bound; defaults to the group default.
            mean_exponent (int): Mean denominator exponent.

        Returns:
            list: The points.
        """
        if n < 0:
            raise PreconditionError(f"sample size must be non-negative, got {n}")
        bound = bound if bound is not None else default_numerator_bound(self.group)
        mean_exponent = mean_exponent if mean_exponent is not None else CONFIG.default_mean_exponent
        return [
            self.sample_point(derive_rng(seed, "sample", self.describe(), index), bound, mean_exponent)
            for index in range(n)
        ]


def default_numerator_bound(group: GroupId) -> int:
    """
    Configured numerator bound for sampling in a group.
    """
    if group == GroupId.TRIADIC:
        return CONFIG.default_triadic_numerator_bound
    return CONFIG.default_numerator_bound


class PiecewiseSpace(BaseSpace, abc.ABC):
    """
    A space whose segments are finite chains of linear pieces along labelled lines.

    Subclasses say how line coordinates map to points; evaluation, membership,
    intersections and joins are shared.
    """

    @abc.abstractmethod
    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> Any:
        """
        Point at a coordinate of a line.
        """

    @abc.abstractmethod
    def _line_coordinates(self, line: Hashable, point: Any) -> list[GroupElement]:
        """
        Coordinates at which a line passes through a point, empty when it does not.
        """

    def _segment(self, p: Any, q: Any, pieces: list[Piece], flipped: bool = False) -> SegmentMap:
        """
        Build a segment map from forward pieces, dropping empty ones.
        """
        kept, cursor = [], self.zero
        for piece in pieces:
            if piece.length.is_zero():
                continue
            kept.append(dataclasses.replace(piece, start=cursor))
            cursor = cursor + piece.length
        return SegmentMap(
            space=self,
            start=q if flipped else p,
            end=p if flipped else q,
            length=cursor,
            pieces=tuple(kept),
            flipped=flipped,
        )

    def _eval_forward(self, seg: SegmentMap, t: GroupElement) -> Any:
        for piece in seg.pieces:
            if t <= piece.start + piece.length:
                return self._point_on_line(piece.line, piece.coordinate(t - piece.start))
        return seg.forward_terminus

    @staticmethod
    def _solve(piece: Piece, coordinate: GroupElement) -> GroupElement:
        """
        Parameter offset into a piece at which it reaches a coordinate.
        """
        offset = coordinate - piece.origin
        if isinstance(piece.velocity, int):
            # unit speed
            return offset * piece.velocity
        return offset / piece.velocity

    def _contains(self, seg: SegmentMap, point: Any) -> bool:
        if seg.length.is_zero():
            return point == seg.start
        for piece in seg.pieces:
            for coordinate in self._line_coordinates(piece.line, point):
                offset = self._solve(piece, coordinate)
                if self.zero <= offset <= piece.length:
                    return True
        return False

    def _pieces_from(self, seg: SegmentMap, x: Any) -> list[Piece]:
        """
        Pieces of a segment oriented to run away from its endpoint x.
        """
        if x == seg.forward_origin:
            return list(seg.pieces)

        pieces, cursor = [], self.zero
        for piece in reversed(seg.pieces):
            pieces.append(
                Piece(
                    start=cursor,
                    length=piece.length,
                    line=piece.line,
                    origin=piece.terminus,
                    velocity=-piece.velocity,
                )
            )
            cursor = cursor + piece.length
        return pieces

    def _intersect_from(self, s1: SegmentMap, s2: SegmentMap, x: Any) -> IntersectionDescriptor:
        # walk both piece lists while they travel the same line the same way
        first, second = self._pieces_from(s1, x), self._pieces_from(s2, x)
        i = j = 0
        offset1 = offset2 = common = self.zero
        while i < len(first) and j < len(second):
            a, b = first[i], second[j]
            if a.line != b.line or a.velocity != b.velocity:
                break
            if self._point_on_line(a.line, a.coordinate(offset1)) != self._point_on_line(
                b.line, b.coordinate(offset2)
            ):
                break
            step = min(a.length - offset1, b.length - offset2)
            common = common + step
            offset1, offset2 = offset1 + step, offset2 + step
            if offset1 == a.length:
                i, offset1 = i + 1, self.zero
            if offset2 == b.length:
                j, offset2 = j + 1, self.zero

        if common.is_zero():
            return IntersectionDescriptor(kind=IntersectionKind.DISJOINT_BEYOND, endpoint=x, common=common)
        return IntersectionDescriptor(
            kind=IntersectionKind.SEGMENT,
            endpoint=self.point_from(s1, x, common),
            common=common,
        )

    def _join(self, s1: SegmentMap, s2: SegmentMap) -> SegmentMap:
        pieces = self._pieces_from(s1, s1.start) + self._pieces_from(s2, s2.start)
        return self._segment(s1.start, s2.end, pieces)


def rejection_sample(space: BaseSpace, draw: Callable[[], Any]) -> Any:
    """
    Repeat a draw until it lands inside the space's domain.

    Args:
        space (BaseSpace): The space.
        draw: Zero-argument callable returning a candidate point.

    Returns:
        The first candidate inside the domain.
    """
    for _ in range(MAX_REJECTION_ATTEMPTS):
        candidate = draw()
        if space.in_domain(candidate):
            return candidate
    raise PreconditionError(f"could not sample a point of {space.describe()}")
