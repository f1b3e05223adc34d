"""
Seeded property checks for the metric axioms, the three tree axioms, unique
geodesity, the fork property and the half-maximum condition.

Each check draws sample tuples from a per-sample stream derived from
(seed, check, index), evaluates canonical probe tuples first, and stops at the
first counterexample. A PASS means no counterexample among the samples; a FAIL
carries a witness whose relation re-verifies exactly.
"""

# imports
import random
from typing import Any, Callable, Iterator, Optional, Union

# project
from lambda_trees.checker.check_types import CheckConfig, CheckReport, CheckStatus
from lambda_trees.checker.construction import IDENTITY_RELATION, Axiom3Trace, axiom3_construction, construction_violation
from lambda_trees.checker.witness import chain_from_seed, no_max_witness
from lambda_trees.groups import GroupElement, GroupId, max_half, random_between, random_element
from lambda_trees.logger import LOGGER
from lambda_trees.spaces import BaseSpace, IntersectionKind, SegmentMap
from lambda_trees.utils.random_utils import derive_rng

# every DEGENERATE_PERIOD-th sample repeats its first point
DEGENERATE_PERIOD = 16

# candidate tuples drawn per requested sample for checks that filter candidates
MAX_ATTEMPT_FACTOR = 8

PASS_NOTE = "sampling-based pass: no counterexample among the samples"
FAIL_NOTE = "verified counterexample"

# a sample evaluation: None when the tuple does not qualify, True when it passes,
# or the witness of a violation
Outcome = Union[None, bool, dict[str, Any]]


def _parameter(space: BaseSpace, rng: random.Random, cfg: CheckConfig, upper: GroupElement) -> GroupElement:
    """
    Draw a segment parameter in [0, upper].
    """
    return random_between(rng, space.zero, upper, cfg.bound_for(space.group), cfg.mean_exponent)


def _segment_literal(space: BaseSpace, seg: SegmentMap) -> list[str]:
    return [space.format_point(seg.start), space.format_point(seg.end)]


def _trace_literals(space: BaseSpace, trace: Axiom3Trace) -> dict[str, Optional[str]]:
    """
    r, l, y' and z' of a construction trace as literals; None where not constructed.
    """

    def point(value: Any) -> Optional[str]:
        return None if value is None else space.format_point(value)

    return {
        "r": str(trace.r),
        "l": str(trace.ell),
        "a": str(trace.a),
        "y'": point(trace.y_prime),
        "z'": point(trace.z_prime),
    }


def _candidates(
    name: str, space: BaseSpace, cfg: CheckConfig, arity: int, degenerate: bool
) -> Iterator[tuple[random.Random, tuple[Any, ...]]]:
    """
    Probe tuples, then seeded random tuples.
    """
    for index, probe in enumerate(space.probes(name)):
        yield derive_rng(cfg.seed, name, "probe", index), probe

    bound = cfg.bound_for(space.group)
    index = 0
    while True:
        rng = derive_rng(cfg.seed, name, index)
        points = tuple(space.sample_point(rng, bound, cfg.mean_exponent) for _ in range(arity))
        if degenerate and index % DEGENERATE_PERIOD == DEGENERATE_PERIOD - 1:
            points = (points[0], points[0]) + points[2:]
        yield rng, points
        index += 1


def _run(
    name: str,
    space: BaseSpace,
    cfg: CheckConfig,
    arity: int,
    evaluate: Callable[[random.Random, tuple[Any, ...]], Outcome],
    degenerate: bool = False,
    extra: Optional[dict[str, Any]] = None,
) -> CheckReport:
    """
    Evaluate candidates until cfg.samples qualify or a counterexample appears.

    Args:
        name (str): Check name.
        space (BaseSpace): The space.
        cfg (CheckConfig): Sampling configuration.
        arity (int): Points per tuple.
        evaluate: Sample evaluation.
        degenerate (bool): Whether to include coincident-point tuples.
        extra (dict): Counters the evaluation fills in; copied into the report.

    Returns:
        CheckReport: The report.
    """
    LOGGER.info("Running %s on %s with seed %d and %d samples", name, space.describe(), cfg.seed, cfg.samples)
    extra = extra if extra is not None else {}
    max_attempts = cfg.samples * MAX_ATTEMPT_FACTOR + len(space.probes(name))
    qualifying = attempts = 0

    for rng, points in _candidates(name, space, cfg, arity, degenerate):
        if qualifying >= cfg.samples or attempts >= max_attempts:
            break
        attempts += 1
        outcome = evaluate(rng, points)
        if outcome is None:
            continue
        qualifying += 1
        if isinstance(outcome, dict):
            LOGGER.warning("%s fails on %s: %s", name, space.describe(), outcome.get("relation"))
            return CheckReport(
                name=name,
                space=space.describe(),
                group=space.group.value,
                status=CheckStatus.FAIL,
                samples=qualifying,
                seed=cfg.seed,
                witness=outcome,
                note=FAIL_NOTE,
                extra={**extra, "attempts": attempts},
            )

    LOGGER.info("%s passes on %s after %d samples", name, space.describe(), qualifying)
    return CheckReport(
        name=name,
        space=space.describe(),
        group=space.group.value,
        status=CheckStatus.PASS,
        samples=qualifying,
        seed=cfg.seed,
        note=PASS_NOTE,
        extra={**extra, "attempts": attempts},
    )


def check_metric(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    Positive definiteness, symmetry and the triangle inequality on sampled triples.

    Args:
        space (BaseSpace): The space.
        cfg (CheckConfig): Sampling configuration.

    Returns:
        CheckReport: The report; the witness is the violating triple with its distances.
    """

    def evaluate(_: random.Random, points: tuple[Any, ...]) -> Outcome:
        p, q, r = points
        d_pq, d_qp = space.distance(p, q), space.distance(q, p)
        d_qr, d_pr = space.distance(q, r), space.distance(p, r)
        witness = {
            "points": {key: space.format_point(point) for key, point in zip("pqr", points)},
            "distances": {"d(p,q)": str(d_pq), "d(q,p)": str(d_qp), "d(q,r)": str(d_qr), "d(p,r)": str(d_pr)},
        }
        if d_pq.sign < 0:
            return {**witness, "relation": "positivity", "lhs": str(d_pq), "rhs": "0"}
        if d_pq.is_zero() != (p == q):
            return {**witness, "relation": "identity", "lhs": str(d_pq), "rhs": "0"}
        if d_pq != d_qp:
            return {**witness, "relation": "symmetry", "lhs": str(d_pq), "rhs": str(d_qp)}
        if d_pr > d_pq + d_qr:
            return {**witness, "relation": "triangle", "lhs": str(d_pr), "rhs": str(d_pq + d_qr)}
        return True

    return _run("metric", space, cfg, 3, evaluate, degenerate=True)


def check_axiom1(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    Every sampled pair is joined by geodesic(p, q): right endpoints, length d(p, q),
    and d(eval t, eval t') = |t - t'| on sampled parameter pairs.
    """

    def evaluate(rng: random.Random, points: tuple[Any, ...]) -> Outcome:
        p, q = points
        seg = space.geodesic(p, q)
        witness = {"points": {"p": space.format_point(p), "q": space.format_point(q)}}
        distance = space.distance(p, q)
        if seg.length != distance:
            return {**witness, "relation": "length", "lhs": str(seg.length), "rhs": str(distance)}
        if seg.eval(space.zero) != p or seg.eval(seg.length) != q:
            return {**witness, "relation": "endpoints", "lhs": str(seg.length), "rhs": str(distance)}

        for _ in range(cfg.parameter_pairs):
            t, t_prime = _parameter(space, rng, cfg, seg.length), _parameter(space, rng, cfg, seg.length)
            at_t, at_t_prime = seg.eval(t), seg.eval(t_prime)
            parameters = {"parameters": {"t": str(t), "t'": str(t_prime)}}
            if space.distance(at_t, at_t_prime) != abs(t - t_prime):
                return {
                    **witness,
                    **parameters,
                    "relation": "isometry",
                    "lhs": str(space.distance(at_t, at_t_prime)),
                    "rhs": str(abs(t - t_prime)),
                }
            if not seg.contains(at_t):
                return {**witness, **parameters, "relation": "membership", "lhs": space.format_point(at_t), "rhs": ""}
            if seg.reverse().eval(seg.length - t) != at_t:
                return {**witness, **parameters, "relation": "reverse", "lhs": space.format_point(at_t), "rhs": ""}
        return True

    return _run("axiom1", space, cfg, 2, evaluate, degenerate=True)


def check_axiom2(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    For sampled (p, q, r) whose segments [q, p] and [q, r] meet only in q, the union
    [p, q] ∪ [q, r] must be a segment.
    """

    def evaluate(_: random.Random, points: tuple[Any, ...]) -> Outcome:
        p, q, r = points
        s1, s2 = space.geodesic(q, p), space.geodesic(q, r)
        if not space.intersect_at_common_endpoint(s1, s2, q).is_point:
            return None
        if space.concat(s1.reverse(), s2) is not None:
            return True
        return {
            "relation": "d(p,r) = D1 + D2",
            "points": {"p": space.format_point(p), "q": space.format_point(q), "r": space.format_point(r)},
            "segments": [_segment_literal(space, s1), _segment_literal(space, s2)],
            "lhs": str(space.distance(p, r)),
            "rhs": str(s1.length + s2.length),
        }

    return _run("axiom2", space, cfg, 3, evaluate)


def check_axiom3(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    For sampled (x, y, z), the segments [x, y] and [x, z] must intersect in a segment.

    The verdict comes from the intersection descriptor. Where d(y, z~) has a
    half-maximum the constructive route also runs: r <= l <= a must hold, the
    descriptor endpoint w must lie on both segments, and a constructed y' = z'
    must lie in [x, w]. The report counts how often y' = z' = w.
    """
    counters = {
        "construction_samples": 0,
        "construction_matches": 0,
        "construction_mismatches": 0,
        "identity_failures": 0,
    }

    def evaluate(_: random.Random, points: tuple[Any, ...]) -> Outcome:
        x, y, z = points
        if space.distance(x, z) < space.distance(x, y):
            y, z = z, y
        s1, s2 = space.geodesic(x, y), space.geodesic(x, z)
        descriptor = space.intersect_at_common_endpoint(s1, s2, x)

        if descriptor.kind == IntersectionKind.NO_MAX_SET:
            chain = chain_from_seed(descriptor.chain_seed, cfg.chain_depth)
            return {
                "relation": "s1 ∩ s2 has no last point",
                "points": {"x": space.format_point(x), "y": space.format_point(y), "z": space.format_point(z)},
                "segments": [_segment_literal(space, s1), _segment_literal(space, s2)],
                "branch": descriptor.chain_seed.branch,
                "chain": chain.to_dict(),
            }

        trace = axiom3_construction(space, x, y, z)
        if trace.r is None:
            return True
        counters["construction_samples"] += 1
        relation = construction_violation(space, trace, descriptor)
        if relation is not None:
            if relation == IDENTITY_RELATION:
                counters["identity_failures"] += 1
            return {
                "relation": relation,
                "points": {"x": space.format_point(x), "y": space.format_point(y), "z": space.format_point(z)},
                "segments": [_segment_literal(space, s1), _segment_literal(space, s2)],
                "construction": _trace_literals(space, trace),
                "w": space.format_point(descriptor.endpoint),
                "common": str(descriptor.common),
            }
        if trace.matches and trace.y_prime == descriptor.endpoint:
            counters["construction_matches"] += 1
        else:
            # y' != z' wherever axiom (2) fails; the verdict stays with the descriptor
            counters["construction_mismatches"] += 1
        return True

    return _run("axiom3", space, cfg, 3, evaluate, extra=counters)


def check_unique(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    For sampled (p, q) and sampled m off geodesic(p, q), d(p, q) < d(p, m) + d(m, q)
    strictly; equality means a second segment from p to q runs through m.
    """

    def evaluate(_: random.Random, points: tuple[Any, ...]) -> Outcome:
        p, q, m = points
        if space.geodesic(p, q).contains(m):
            return None
        d_pq, detour = space.distance(p, q), space.distance(p, m) + space.distance(m, q)
        if d_pq < detour:
            return True
        return {
            "relation": "d(p,q) < d(p,m) + d(m,q)",
            "points": {"p": space.format_point(p), "q": space.format_point(q), "m": space.format_point(m)},
            "lhs": str(d_pq),
            "rhs": str(detour),
        }

    return _run("unique", space, cfg, 3, evaluate)


def check_fork(space: BaseSpace, cfg: CheckConfig) -> CheckReport:
    """
    For z on [x, y] and any p, [x, z] ∩ [z, p] = {z} or [y, z] ∩ [z, p] = {z}.
    Requires a uniquely geodesic space; otherwise the report is skipped.
    """
    unique = check_unique(space, cfg)
    if unique.status != CheckStatus.PASS:
        LOGGER.info("Skipping fork on %s: not uniquely geodesic", space.describe())
        return CheckReport(
            name="fork",
            space=space.describe(),
            group=space.group.value,
            status=CheckStatus.SKIP,
            samples=0,
            seed=cfg.seed,
            note="skipped: unique fails on this seed, so the space is not uniquely geodesic",
        )

    def evaluate(rng: random.Random, points: tuple[Any, ...]) -> Outcome:
        x, y, p = points
        seg = space.geodesic(x, y)
        t = _parameter(space, rng, cfg, seg.length)
        z = seg.eval(t)
        towards_p = space.geodesic(z, p)
        first = space.intersect_at_common_endpoint(space.geodesic(x, z), towards_p, z)
        second = space.intersect_at_common_endpoint(space.geodesic(y, z), towards_p, z)
        if first.is_point or second.is_point:
            return True
        return {
            "relation": "[x,z] ∩ [z,p] = {z} or [y,z] ∩ [z,p] = {z}",
            "points": {
                "x": space.format_point(x),
                "y": space.format_point(y),
                "z": space.format_point(z),
                "p": space.format_point(p),
            },
            "parameters": {"t": str(t)},
            "x'": space.format_point(first.endpoint) if first.kind == IntersectionKind.SEGMENT else None,
            "y'": space.format_point(second.endpoint) if second.kind == IntersectionKind.SEGMENT else None,
        }

    return _run("fork", space, cfg, 3, evaluate)


def condition_a_probe(group: GroupId | str, cfg: CheckConfig) -> CheckReport:
    """
    Sample positive lambda0 and require {t : 0 <= 2t <= lambda0} to have a maximum.

    Args:
        group: Group ID.
        cfg (CheckConfig): Sampling configuration.

    Returns:
        CheckReport: The report; the witness is a lambda0 without a maximum and its chain.
    """
    group = GroupId.parse(group) if not isinstance(group, GroupId) else group
    LOGGER.info("Running condition-a on %s with seed %d and %d samples", group.value, cfg.seed, cfg.samples)
    bound = cfg.bound_for(group)

    for index in range(cfg.samples):
        rng = derive_rng(cfg.seed, "condition-a", index)
        lambda0 = abs(random_element(group, rng, bound, cfg.mean_exponent))
        while lambda0.is_zero():
            lambda0 = abs(random_element(group, rng, bound, cfg.mean_exponent))

        if not max_half(lambda0).exists:
            chain = no_max_witness(group, lambda0, cfg.chain_depth)
            LOGGER.warning("condition-a fails on %s at %s", group.value, lambda0)
            return CheckReport(
                name="condition-a",
                space=None,
                group=group.value,
                status=CheckStatus.FAIL,
                samples=index + 1,
                seed=cfg.seed,
                witness={"relation": "max_half(λ0) exists", "lambda0": str(lambda0), "chain": chain.to_dict()},
                note=FAIL_NOTE,
            )

    return CheckReport(
        name="condition-a",
        space=None,
        group=group.value,
        status=CheckStatus.PASS,
        samples=cfg.samples,
        seed=cfg.seed,
        note=PASS_NOTE,
    )


# checks that run on a space, in report order
SPACE_CHECKS: dict[str, Callable[[BaseSpace, CheckConfig], CheckReport]] = {
    "metric": check_metric,
    "axiom1": check_axiom1,
    "axiom2": check_axiom2,
    "axiom3": check_axiom3,
    "unique": check_unique,
    "fork": check_fork,
}

CHECK_NAMES: tuple[str, ...] = tuple(SPACE_CHECKS) + ("condition-a",)
