"""
Three-branch space over Z[1/3] with lambda0 = 1.
"""

# packages
import pytest

# project
from lambda_trees.groups import GroupId, parse_element
from lambda_trees.spaces import IntersectionKind, X1Point
from lambda_trees.spaces.x1_space import Route, X1Space
from lambda_trees.utils.random_utils import derive_rng


def point(text: str, branch: int) -> X1Point:
    return X1Point(parse_element(GroupId.TRIADIC, text), branch)


def test_distance(x1_triadic):
    assert str(x1_triadic.distance(point("0", 1), point("0", 2))) == "1"
    assert str(x1_triadic.distance(point("1/3^1", 1), point("1/3^2", 1))) == "2/3^2"
    assert str(x1_triadic.distance(point("1/3^1", 1), point("1/3^2", 3))) == "5/3^2"


def test_cross_branch_segment(x1_triadic):
    seg = x1_triadic.geodesic(point("0", 1), point("0", 2))
    assert seg.eval(parse_element(GroupId.TRIADIC, "1/3^1")) == point("1/3^1", 1)
    assert seg.eval(parse_element(GroupId.TRIADIC, "2/3^1")) == point("1/3^1", 2)
    assert seg.contains(point("4/3^2", 1))
    assert not seg.contains(point("0", 3))


def test_same_branch_segment_runs_down(x1_triadic):
    seg = x1_triadic.geodesic(point("4/3^2", 2), point("1/3^2", 2))
    assert seg.flipped
    assert seg.eval(parse_element(GroupId.TRIADIC, "1/3^2")) == point("1/3^1", 2)
    assert not seg.contains(point("0", 2))


def test_routes():
    assert X1Space.route(point("0", 1), point("0", 1)) == Route.STAY
    assert X1Space.route(point("1/3^1", 1), point("0", 1)) == Route.DOWN
    assert X1Space.route(point("0", 1), point("1/3^1", 1)) == Route.UP
    assert X1Space.route(point("0", 1), point("0", 3)) == Route.THROUGH


def test_intersection_without_last_point(x1_triadic):
    x = point("0", 1)
    s1, s2 = x1_triadic.geodesic(x, point("0", 2)), x1_triadic.geodesic(x, point("0", 3))
    descriptor = x1_triadic.intersect_at_common_endpoint(s1, s2, x)
    assert descriptor.kind == IntersectionKind.NO_MAX_SET
    assert not descriptor.is_segment
    assert descriptor.chain_seed.branch == 1
    assert descriptor.chain_seed.floor == x.x


@pytest.mark.parametrize(
    "y,z,kind,endpoint",
    [
        # both through branch 1 onto branch 2
        (point("0", 2), point("1/3^1", 2), IntersectionKind.SEGMENT, point("1/3^1", 2)),
        # up the branch, then through
        (point("1/3^1", 1), point("0", 2), IntersectionKind.SEGMENT, point("1/3^1", 1)),
        # down and through
        (point("0", 1), point("0", 2), IntersectionKind.DISJOINT_BEYOND, point("1/3^2", 1)),
        # both up
        (point("1/3^1", 1), point("4/3^2", 1), IntersectionKind.SEGMENT, point("1/3^1", 1)),
    ],
)
def test_intersection_cases(x1_triadic, y, z, kind, endpoint):
    x = point("1/3^2", 1)
    descriptor = x1_triadic.intersect_at_common_endpoint(x1_triadic.geodesic(x, y), x1_triadic.geodesic(x, z), x)
    assert descriptor.kind == kind
    assert descriptor.endpoint == endpoint


def test_union_across_branches_is_a_segment(x1_triadic):
    p, q, r = point("0", 1), point("1/3^2", 1), point("1/3^1", 3)
    joined = x1_triadic.concat(x1_triadic.geodesic(p, q), x1_triadic.geodesic(q, r))
    assert joined is not None
    assert joined.length == x1_triadic.distance(p, r)


def test_parse_point(x1_triadic):
    assert x1_triadic.parse_point("4/3^2@3") == point("4/3^2", 3)
    assert x1_triadic.format_point(point("4/3^2", 3)) == "4/3^2@3"
    with pytest.raises(ValueError):
        x1_triadic.parse_point("1/3^1@4")


def test_triangle_is_strict_across_three_branches(x1_triadic):
    # the detour through q's branch costs lambda0 - 2 q.x, which is never zero
    for index in range(500):
        rng = derive_rng(7, "three-branches", index)
        p, q, r = (X1Point(x1_triadic.sample_point(rng, 729, 3).x, branch) for branch in (1, 2, 3))
        d = x1_triadic.distance
        assert d(p, r) < d(p, q) + d(q, r)
        assert d(p, q) + d(q, r) - d(p, r) == x1_triadic.lambda0 - q.x * 2
