"""
Axiom checks on the built-in spaces: the independence matrix, canonical
counterexamples, condition (a) and determinism.
"""

# imports
from dataclasses import replace

# packages
import pytest

# project
from lambda_trees.checker import (
    CHECK_NAMES,
    SPACE_CHECKS,
    CheckConfig,
    CheckReport,
    CheckStatus,
    WitnessChain,
    check_axiom1,
    check_axiom2,
    check_axiom3,
    check_fork,
    check_metric,
    check_unique,
    condition_a_probe,
    reverify_witness,
)
from lambda_trees.checker import axiom_checks
from lambda_trees.checker.construction import COMMON_POINT_RELATION, IDENTITY_RELATION, axiom3_construction
from lambda_trees.errors import PreconditionError
from lambda_trees.groups import GroupElement, GroupId
from lambda_trees.spaces import (
    IntersectionDescriptor,
    IntersectionKind,
    IntervalSpace,
    X1Space,
    parse_space_spec,
    random_tree,
)
from lambda_trees.utils.random_utils import derive_rng

# expected outcome per space and check; fork needs unique, so it is skipped on l1grid
INDEPENDENCE_MATRIX = {
    "interval": {name: CheckStatus.PASS for name in SPACE_CHECKS},
    "tree": {name: CheckStatus.PASS for name in SPACE_CHECKS},
    "x1": {
        "metric": CheckStatus.PASS,
        "axiom1": CheckStatus.PASS,
        "axiom2": CheckStatus.PASS,
        "axiom3": CheckStatus.FAIL,
        "unique": CheckStatus.PASS,
        "fork": CheckStatus.PASS,
    },
    "x2": {
        "metric": CheckStatus.PASS,
        "axiom1": CheckStatus.PASS,
        "axiom2": CheckStatus.FAIL,
        "axiom3": CheckStatus.PASS,
        "unique": CheckStatus.PASS,
        "fork": CheckStatus.PASS,
    },
    "x3": {
        "metric": CheckStatus.PASS,
        "axiom1": CheckStatus.PASS,
        "axiom2": CheckStatus.FAIL,
        "axiom3": CheckStatus.PASS,
        "unique": CheckStatus.PASS,
        "fork": CheckStatus.PASS,
    },
    "l1grid": {"unique": CheckStatus.FAIL, "fork": CheckStatus.SKIP},
}


class AsymmetricX1(X1Space):
    """
    Corrupted three-branch space whose cross-branch distance is not symmetric.
    """

    def _distance(self, p, q):
        if p.branch == q.branch:
            return super()._distance(p, q)
        return self.lambda0 - p.x + q.x


class PointIntersectionInterval(IntervalSpace):
    """
    Corrupted interval that reports every intersection from x as {x}.
    """

    def _intersect_from(self, s1, s2, x):
        return IntersectionDescriptor(IntersectionKind.DISJOINT_BEYOND, x, self.zero)


@pytest.mark.parametrize(
    "space_name,check_name,expected",
    [
        (space_name, check_name, expected)
        for space_name, row in INDEPENDENCE_MATRIX.items()
        for check_name, expected in row.items()
    ],
)
def test_independence_matrix(all_spaces, small_config, space_name, check_name, expected):
    report = SPACE_CHECKS[check_name](all_spaces[space_name], small_config)
    assert report.status == expected, report.witness
    if expected == CheckStatus.FAIL:
        assert report.witness is not None
        assert reverify_witness(report, all_spaces[space_name])
    if expected == CheckStatus.PASS:
        assert report.samples > 0
        assert report.witness is None


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_outcomes_do_not_depend_on_the_seed(all_spaces, seed):
    cfg = CheckConfig(seed=seed, samples=150)
    for space_name in ("x1", "x2", "x3"):
        for check_name, expected in INDEPENDENCE_MATRIX[space_name].items():
            if check_name == "fork":
                continue
            assert SPACE_CHECKS[check_name](all_spaces[space_name], cfg).status == expected


def test_x1_checks_at_full_size(x1_triadic):
    assert check_metric(x1_triadic, CheckConfig(samples=5000)).passed
    assert check_axiom1(x1_triadic, CheckConfig(samples=1000)).passed
    assert check_axiom2(x1_triadic, CheckConfig(samples=500)).passed
    assert check_unique(x1_triadic, CheckConfig(samples=1000)).passed


@pytest.mark.slow
@pytest.mark.parametrize("check_name", list(SPACE_CHECKS))
def test_random_rational_tree_passes_at_full_size(check_name):
    tree = random_tree(GroupId.RATIONAL, derive_rng(0, "acceptance-tree"))
    samples = 5000 if check_name == "metric" else 1000
    report = SPACE_CHECKS[check_name](tree, CheckConfig(samples=samples))
    assert report.status == CheckStatus.PASS, report.witness


@pytest.mark.slow
def test_x2_checks_at_full_size(x2_rational):
    cfg = CheckConfig(samples=2000)
    for check in (check_metric, check_axiom1, check_axiom3, check_unique, check_fork):
        report = check(x2_rational, cfg)
        assert report.status == CheckStatus.PASS, report.witness
    assert check_axiom2(x2_rational, cfg).status == CheckStatus.FAIL


@pytest.mark.slow
@pytest.mark.parametrize("space_name", ["interval", "tree", "x1", "x3"])
def test_fork_at_full_size(all_spaces, space_name):
    report = check_fork(all_spaces[space_name], CheckConfig(samples=2000))
    assert report.status == CheckStatus.PASS, report.witness


def test_x1_axiom3_witness(x1_triadic, small_config):
    report = check_axiom3(x1_triadic, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.passed is False
    assert report.witness["segments"] == [["0@1", "0@2"], ["0@1", "0@3"]]
    assert report.witness["branch"] == 1

    chain = WitnessChain.from_dict(GroupId.TRIADIC, report.witness["chain"])
    assert len(chain.elements) >= 10
    assert chain.verify()
    assert [str(element) for element in chain.elements[:3]] == ["1/3^1", "4/3^2", "13/3^3"]


def test_x2_axiom2_witness(x2_rational, small_config):
    report = check_axiom2(x2_rational, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["segments"] == [["1,0", "2,0"], ["1,0", "2,1"]]
    assert (report.witness["lhs"], report.witness["rhs"]) == ("2", "3")
    assert report.samples == 1


def test_x3_axiom2_witness(x3_int, small_config):
    report = check_axiom2(x3_int, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["points"] == {"p": "0", "q": "1", "r": "2"}
    assert (report.witness["lhs"], report.witness["rhs"]) == ("1", "2")


def test_l1grid_unique_witness(l1grid_int, small_config):
    report = check_unique(l1grid_int, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["points"] == {"p": "0;0", "q": "1;1", "m": "0;1"}
    assert (report.witness["lhs"], report.witness["rhs"]) == ("2", "2")


def test_fork_is_skipped_without_uniqueness(l1grid_int, small_config):
    report = check_fork(l1grid_int, small_config)
    assert report.status == CheckStatus.SKIP
    assert report.passed is None
    assert "not uniquely geodesic" in report.note


def test_corrupted_metric_fails(small_config):
    space = AsymmetricX1(GroupId.TRIADIC, parse_space_spec("triadic", "x1:1").lambda0)
    report = check_metric(space, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["relation"] == "symmetry"
    assert reverify_witness(report, space)


def test_uniqueness_follows_from_either_axiom(all_spaces, small_config):
    # l1grid is left out: the checks only see its row-first staircases
    for space_name in ("interval", "tree", "x1", "x2", "x3"):
        space = all_spaces[space_name]
        statuses = {check_axiom2(space, small_config).status, check_axiom3(space, small_config).status}
        if CheckStatus.PASS in statuses:
            assert check_unique(space, small_config).status == CheckStatus.PASS


def test_axiom3_records_the_construction(star_tree, small_config):
    report = check_axiom3(star_tree, small_config)
    assert report.status == CheckStatus.PASS
    assert report.extra["construction_samples"] > 0
    assert report.extra["construction_mismatches"] == 0
    assert report.extra["identity_failures"] == 0
    assert report.extra["construction_matches"] == report.extra["construction_samples"]


def test_axiom3_fails_when_the_common_point_lies_beyond_the_intersection(small_config):
    zero, five = GroupElement.from_int(GroupId.INT, 0), GroupElement.from_int(GroupId.INT, 5)
    space = PointIntersectionInterval(GroupId.INT, zero, five)
    report = check_axiom3(space, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["relation"] == COMMON_POINT_RELATION
    construction = report.witness["construction"]
    assert construction["y'"] == construction["z'"] != report.witness["points"]["x"]
    assert (report.witness["w"], report.witness["common"]) == (report.witness["points"]["x"], "0")
    assert report.extra["identity_failures"] == 0
    assert reverify_witness(report, space)
    assert not reverify_witness(report, IntervalSpace(GroupId.INT, zero, five))


def test_axiom3_fails_when_the_identities_break(star_tree, small_config, monkeypatch):
    def stretched(space, x, y, z):
        trace = axiom3_construction(space, x, y, z)
        if trace.r is None:
            return trace
        return replace(trace, ell=trace.a + GroupElement.from_int(space.group, 1))

    monkeypatch.setattr(axiom_checks, "axiom3_construction", stretched)
    report = check_axiom3(star_tree, small_config)
    assert report.status == CheckStatus.FAIL
    assert report.witness["relation"] == IDENTITY_RELATION
    assert report.extra["identity_failures"] == 1
    assert set(report.witness["construction"]) == {"r", "l", "a", "y'", "z'"}
    # the honest construction does not reproduce the violation
    assert not reverify_witness(report, star_tree)


def test_construction_mismatches_do_not_fail_axiom3(x2_rational, small_config):
    report = check_axiom3(x2_rational, small_config)
    assert report.status == CheckStatus.PASS
    assert report.extra["identity_failures"] == 0
    assert report.extra["construction_mismatches"] > 0
    assert report.extra["construction_samples"] == (
        report.extra["construction_matches"] + report.extra["construction_mismatches"]
    )


def test_pass_and_fail_notes(x3_int, small_config):
    passed = check_axiom1(x3_int, small_config)
    failed = check_axiom2(x3_int, small_config)
    assert "sampling-based" in passed.note
    assert "verified" in failed.note
    assert passed.extra["attempts"] >= passed.samples


@pytest.mark.parametrize("group", ["int", "rational", "dyadic"])
def test_condition_a_passes(group):
    report = condition_a_probe(group, CheckConfig(samples=1000))
    assert report.status == CheckStatus.PASS
    assert report.samples == 1000
    assert report.space is None


@pytest.mark.parametrize("group", ["triadic", "zsqrt2", "lex-int"])
def test_condition_a_fails_with_a_chain(group):
    report = condition_a_probe(group, CheckConfig(samples=1000, chain_depth=20))
    assert report.status == CheckStatus.FAIL
    chain = WitnessChain.from_dict(GroupId(group), report.witness["chain"])
    assert len(chain.elements) == 20
    assert chain.verify()
    assert report.witness["lambda0"] == str(chain.lambda0)
    assert reverify_witness(report)


def test_reports_are_deterministic(x2_rational, small_config):
    first = check_axiom3(x2_rational, small_config).to_dict()
    second = check_axiom3(x2_rational, small_config).to_dict()
    assert first == second
    assert CheckReport.from_dict(first).to_dict() == first


def test_check_config_validation():
    with pytest.raises(PreconditionError):
        CheckConfig(samples=0)
    with pytest.raises(PreconditionError):
        CheckConfig(chain_depth=0)
    assert CheckConfig.from_config(seed=5, samples=None).samples == 1000
    assert CheckConfig(numerator_bound=9).bound_for(GroupId.TRIADIC) == 9
    assert CheckConfig().bound_for(GroupId.TRIADIC) == 729


def test_check_names():
    assert CHECK_NAMES == ("metric", "axiom1", "axiom2", "axiom3", "unique", "fork", "condition-a")
