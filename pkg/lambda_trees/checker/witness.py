"""
Witness chains for half-sets without a maximum, and re-verification of the
counterexamples recorded in failing reports.
"""

# imports
from typing import Any, Callable, Optional

# project
from lambda_trees.config import CONFIG
from lambda_trees.errors import DomainError, PreconditionError
from lambda_trees.groups import GroupElement, GroupId, iter_half_chain, max_half, parse_element
from lambda_trees.checker.check_types import CheckReport, CheckStatus, WitnessChain
from lambda_trees.checker.construction import axiom3_construction, construction_violation
from lambda_trees.spaces import BaseSpace, ChainSeed, IntersectionKind


def no_max_witness(
    group: GroupId | str,
    lambda0: GroupElement,
    depth: int,
    floor: Optional[GroupElement] = None,
) -> WitnessChain:
    """
    Strictly increasing chain of `depth` elements in {t : 0 <= 2t <= lambda0}.

    Args:
        group: Group ID of lambda0.
        lambda0 (GroupElement): Positive element whose half-set has no maximum.
        depth (int): Chain length.
        floor (GroupElement): Only keep elements >= floor.

    Returns:
        WitnessChain: The chain.
    """
    group = GroupId.parse(group) if not isinstance(group, GroupId) else group
    if lambda0.group != group:
        raise DomainError(f"{lambda0!r} is not an element of {group.value}")
    result = max_half(lambda0)
    if result.exists:
        raise PreconditionError(f"maximum exists: {result.maximum}")

    elements: list[GroupElement] = []
    for scanned, element in enumerate(iter_half_chain(lambda0)):
        if len(elements) == depth:
            break
        if scanned >= CONFIG.max_chain_scan:
            raise PreconditionError(f"no {depth} chain elements above {floor} within {scanned} steps")
        if floor is None or element >= floor:
            elements.append(element)
    return WitnessChain(lambda0=lambda0, elements=tuple(elements), floor=floor)


def chain_from_seed(seed: ChainSeed, depth: int) -> WitnessChain:
    """
    Witness chain for an intersection descriptor without a last point.
    """
    return no_max_witness(seed.lambda0.group, seed.lambda0, depth, floor=seed.floor)


def _verify_metric(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    p, q = points["p"], points["q"]
    relation = witness["relation"]
    if relation == "identity":
        return space.distance(p, q).is_zero() != (p == q)
    if relation == "positivity":
        return space.distance(p, q).sign < 0
    if relation == "symmetry":
        return space.distance(p, q) != space.distance(q, p)
    r = points["r"]
    return space.distance(p, r) > space.distance(p, q) + space.distance(q, r)


def _verify_axiom1(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    p, q = points["p"], points["q"]
    seg = space.geodesic(p, q)
    relation = witness["relation"]
    if relation == "length":
        return seg.length != space.distance(p, q)
    if relation == "endpoints":
        return seg.eval(space.zero) != p or seg.eval(seg.length) != q
    t = parse_element(space.group, witness["parameters"]["t"])
    if relation == "membership":
        return not seg.contains(seg.eval(t))
    if relation == "reverse":
        return seg.reverse().eval(seg.length - t) != seg.eval(t)
    t_prime = parse_element(space.group, witness["parameters"]["t'"])
    return space.distance(seg.eval(t), seg.eval(t_prime)) != abs(t - t_prime)


def _verify_axiom2(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    p, q, r = points["p"], points["q"], points["r"]
    s1, s2 = space.geodesic(q, p), space.geodesic(q, r)
    if not space.intersect_at_common_endpoint(s1, s2, q).is_point:
        return False
    return space.concat(s1.reverse(), s2) is None and space.distance(p, r) != s1.length + s2.length


def _verify_axiom3(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    x, y, z = points["x"], points["y"], points["z"]
    descriptor = space.intersect_at_common_endpoint(space.geodesic(x, y), space.geodesic(x, z), x)
    if "chain" in witness:
        if descriptor.kind != IntersectionKind.NO_MAX_SET:
            return False
        return WitnessChain.from_dict(space.group, witness["chain"]).verify()
    if descriptor.kind == IntersectionKind.NO_MAX_SET:
        return False
    trace = axiom3_construction(space, x, y, z)
    return construction_violation(space, trace, descriptor) == witness["relation"]


def _verify_unique(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    p, q, m = points["p"], points["q"], points["m"]
    if space.geodesic(p, q).contains(m):
        return False
    return space.distance(p, q) == space.distance(p, m) + space.distance(m, q)


def _verify_fork(space: BaseSpace, witness: dict[str, Any], points: dict[str, Any]) -> bool:
    x, y, z, p = points["x"], points["y"], points["z"], points["p"]
    towards_p = space.geodesic(z, p)
    first = space.intersect_at_common_endpoint(space.geodesic(x, z), towards_p, z)
    second = space.intersect_at_common_endpoint(space.geodesic(y, z), towards_p, z)
    return not first.is_point and not second.is_point


VERIFIERS: dict[str, Callable[[BaseSpace, dict[str, Any], dict[str, Any]], bool]] = {
    "metric": _verify_metric,
    "axiom1": _verify_axiom1,
    "axiom2": _verify_axiom2,
    "axiom3": _verify_axiom3,
    "unique": _verify_unique,
    "fork": _verify_fork,
}


def reverify_witness(report: CheckReport, space: Optional[BaseSpace] = None) -> bool:
    """
    Re-parse the literals of a failing report and re-evaluate the violated relation.

    Args:
        report (CheckReport): A FAIL report.
        space (BaseSpace): The space the report was produced on; unused for condition-a.

    Returns:
        bool: Whether the violation is reproduced exactly.
    """
    if report.status != CheckStatus.FAIL or report.witness is None:
        raise PreconditionError(f"{report.name} report carries no failure witness")

    if report.name == "condition-a":
        chain = WitnessChain.from_dict(GroupId(report.group), report.witness["chain"])
        return len(chain.elements) > 0 and chain.verify()

    if space is None:
        raise PreconditionError(f"re-verifying {report.name} needs the space")
    points = {key: space.parse_point(text) for key, text in report.witness["points"].items()}
    return VERIFIERS[report.name](space, report.witness, points)
