"""
Constructive route to the intersection of two segments from a common point.

Given s = [x, y] and s' = [x, z] with a = d(x, y) <= b = d(x, z):

    z~  = point of s' at distance a from x
    r   = max{t : 0 <= 2t <= d(y, z~)}
    l   = d(y, z~) - r
    p   = point of [y, z~] at distance r from y
    q   = point of [y, z~] at distance l from y
    y'  = point of s at distance a - l from x
    z'  = point of s' at distance a - l from x

In a space satisfying axioms (1) and (2) whose group has every half-maximum,
y' = z' and s ∩ s' = [x, y'].
"""

# future imports
from __future__ import annotations

# imports
from dataclasses import dataclass, replace
from typing import Any, Optional

# project
from lambda_trees.groups import GroupElement, max_half
from lambda_trees.spaces import BaseSpace, IntersectionDescriptor

IDENTITY_RELATION = "r <= l <= a"
ENDPOINT_RELATION = "w lies on s and s' at distance common from x"
COMMON_POINT_RELATION = "y' = z' lies in s ∩ s'"


@dataclass(frozen=True)
class Axiom3Trace:
    """
    All intermediate values of the construction for one triple.
    """

    x: Any
    y: Any
    z: Any
    a: GroupElement
    b: GroupElement
    z_tilde: Any
    d_y_z_tilde: GroupElement
    # None when d(y, z~) has no half-maximum
    r: Optional[GroupElement] = None
    ell: Optional[GroupElement] = None
    p: Any = None
    q: Any = None
    y_prime: Any = None
    z_prime: Any = None
    swapped: bool = False

    @property
    def complete(self) -> bool:
        """
        Whether r exists and every point was constructed.
        """
        return self.y_prime is not None

    @property
    def identities_hold(self) -> bool:
        """
        r <= l <= a.
        """
        return self.r is not None and self.ell is not None and self.r <= self.ell <= self.a

    @property
    def matches(self) -> bool:
        """
        y' = z'.
        """
        return self.complete and self.y_prime == self.z_prime


def axiom3_construction(space: BaseSpace, x: Any, y: Any, z: Any) -> Axiom3Trace:
    """
    Run the construction on the segments [x, y] and [x, z].

    Args:
        space (BaseSpace): The space.
        x: Common start.
        y: End of the first segment.
        z: End of the second segment.

    Returns:
        Axiom3Trace: The trace, ordered so that a <= b.
    """
    s, s_prime = space.geodesic(x, y), space.geodesic(x, z)
    swapped = s_prime.length < s.length
    if swapped:
        y, z, s, s_prime = z, y, s_prime, s
    a, b = s.length, s_prime.length

    z_tilde = s_prime.eval(a)
    sigma = space.geodesic(y, z_tilde)
    d_y_z_tilde = sigma.length
    trace = Axiom3Trace(
        x=x, y=y, z=z, a=a, b=b, z_tilde=z_tilde, d_y_z_tilde=d_y_z_tilde, swapped=swapped
    )

    if d_y_z_tilde.is_zero():
        r = d_y_z_tilde
    else:
        r = max_half(d_y_z_tilde).maximum
        if r is None:
            return trace

    ell = d_y_z_tilde - r
    if not ell <= a:
        return replace(trace, r=r, ell=ell)
    return replace(
        trace,
        r=r,
        ell=ell,
        p=sigma.eval(r),
        q=sigma.eval(ell),
        y_prime=s.eval(a - ell),
        z_prime=s_prime.eval(a - ell),
    )


def construction_violation(space: BaseSpace, trace: Axiom3Trace, descriptor: IntersectionDescriptor) -> Optional[str]:
    """
    Relation broken by a construction trace against the intersection descriptor of
    the same segments, or None.

    r <= l <= a follows from the triangle inequality alone. A constructed common
    point y' = z' must lie in s ∩ s' = [x, w], and w itself must lie on both
    segments at distance `common` from x. y' != z' is not a violation: it happens
    wherever axiom (2) fails.
    """
    if trace.r is None:
        return None
    if not trace.identities_hold:
        return IDENTITY_RELATION

    s, s_prime = space.geodesic(trace.x, trace.y), space.geodesic(trace.x, trace.z)
    w = descriptor.endpoint
    if not (s.contains(w) and s_prime.contains(w)) or space.distance(trace.x, w) != descriptor.common:
        return ENDPOINT_RELATION
    if trace.matches and space.distance(trace.x, trace.y_prime) > descriptor.common:
        return COMMON_POINT_RELATION
    return None
