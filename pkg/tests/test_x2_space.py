"""
Polar Manhattan space over Q.
"""

# packages
import pytest

# project
from lambda_trees.errors import ConfigError
from lambda_trees.groups import GroupId, parse_element
from lambda_trees.spaces import IntersectionKind, X2Point, X2Space


def point(t: str, phi: str) -> X2Point:
    return X2Point(parse_element(GroupId.RATIONAL, t), parse_element(GroupId.RATIONAL, phi))


def q(text: str):
    return parse_element(GroupId.RATIONAL, text)


def test_distance(x2_rational):
    assert x2_rational.distance(point("1", "0"), point("2", "1")) == q("2")
    assert x2_rational.distance(point("2", "0"), point("2", "1")) == q("2")
    assert x2_rational.distance(point("1/2", "1/4"), point("3/2", "3/4")) == q("5/4")


def test_segment_walks_the_inner_arc_first(x2_rational):
    seg = x2_rational.geodesic(point("1", "0"), point("2", "1"))
    assert seg.length == q("2")
    assert seg.eval(q("1/2")) == point("1", "1/2")
    assert seg.eval(q("3/2")) == point("3/2", "1")


def test_segment_from_the_outer_point(x2_rational):
    seg = x2_rational.geodesic(point("2", "1"), point("1", "0"))
    assert seg.flipped
    assert seg.eval(q("1/2")) == point("3/2", "1")
    assert seg.eval(q("3/2")) == point("1", "1/2")
    assert seg.contains(point("1", "1/4"))
    assert not seg.contains(point("2", "1/4"))


def test_segments_meet_only_at_the_fork(x2_rational):
    x = point("1", "0")
    s1, s2 = x2_rational.geodesic(x, point("2", "0")), x2_rational.geodesic(x, point("2", "1"))
    assert x2_rational.intersect_at_common_endpoint(s1, s2, x).is_point
    assert x2_rational.concat(s1.reverse(), s2) is None
    assert x2_rational.distance(point("2", "0"), point("2", "1")) == q("2")


def test_common_ray_then_arc(x2_rational):
    x = point("2", "1")
    s1, s2 = x2_rational.geodesic(x, point("1", "0")), x2_rational.geodesic(x, point("1", "1/2"))
    descriptor = x2_rational.intersect_at_common_endpoint(s1, s2, x)
    assert descriptor.kind == IntersectionKind.SEGMENT
    assert descriptor.endpoint == point("1", "1/2")
    assert descriptor.common == q("3/2")


def test_requires_a_field():
    with pytest.raises(ConfigError, match="x2 requires an ordered field"):
        X2Space(GroupId.TRIADIC)


def test_domain(x2_rational):
    assert not x2_rational.in_domain(point("0", "0"))
    assert not x2_rational.in_domain(point("5/2", "0"))
    assert not x2_rational.in_domain(point("1", "3/2"))
    assert x2_rational.in_domain(point("2", "1"))
