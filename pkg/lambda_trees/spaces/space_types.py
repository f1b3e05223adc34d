"""
Point types of the built-in spaces. Interval and circle points are plain
GroupElement values.
"""

# imports
from dataclasses import dataclass
from typing import Optional

# project
from lambda_trees.groups import GroupElement


@dataclass(frozen=True)
class X1Point:
    """
    Point (x, branch) of the three-branch space, with 0 <= 2x <= lambda0.
    """

    x: GroupElement
    branch: int


@dataclass(frozen=True)
class X2Point:
    """
    Polar point (t, phi) with 0 < t <= 2 and 0 <= phi <= 1.
    """

    t: GroupElement
    phi: GroupElement


@dataclass(frozen=True)
class GridPoint:
    """
    Point (u, w) of the l1 grid square.
    """

    u: GroupElement
    w: GroupElement


@dataclass(frozen=True)
class TreePoint:
    """
    Point of a finite simplicial tree: either a vertex, or an interior point of an
    edge at an offset from the edge's first endpoint.
    """

    vertex: Optional[str] = None
    edge: Optional[int] = None
    offset: Optional[GroupElement] = None

    @property
    def is_vertex(self) -> bool:
        """
        Whether the point is a vertex.
        """
        return self.vertex is not None


@dataclass(frozen=True)
class TreeEdge:
    """
    Edge u -- v of a simplicial tree with a positive length.
    """

    u: str
    v: str
    length: GroupElement
