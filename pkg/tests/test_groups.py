"""
Ordered abelian group laws, the half-maximum decision and the witness chains
behind it.
"""

# imports
from fractions import Fraction

# packages
import pytest
from hypothesis import given
from hypothesis import strategies as st

# project
from lambda_trees.errors import DomainError, PreconditionError
from lambda_trees.groups import (
    GroupElement,
    GroupId,
    Ordering,
    add,
    compare,
    floor_quotient,
    get_group,
    iter_half_chain,
    max_half,
    parse_element,
    random_between,
    random_element,
    try_halve,
)
from lambda_trees.groups.quadratic_group import ceil_sqrt2_multiple, floor_sqrt2_multiple, multiply
from lambda_trees.utils.random_utils import derive_rng

small = st.integers(min_value=-10**6, max_value=10**6)
exponents = st.integers(min_value=0, max_value=12)


def elements(group: GroupId) -> st.SearchStrategy:
    """
    Strategy of elements of one group, built from possibly non-canonical tuples.
    """
    if group == GroupId.INT:
        values = st.tuples(small)
    elif group == GroupId.RATIONAL:
        values = st.tuples(small, st.integers(min_value=1, max_value=10**4))
    elif group in (GroupId.DYADIC, GroupId.TRIADIC):
        values = st.tuples(small, exponents)
    else:
        values = st.tuples(small, small)
    return values.map(lambda value: GroupElement.of(group, value))


def triples(group: GroupId) -> st.SearchStrategy:
    return st.tuples(elements(group), elements(group), elements(group))


@pytest.mark.parametrize("group", list(GroupId))
def test_group_laws(group):
    @given(triples(group))
    def laws(triple):
        u, v, w = triple
        zero = GroupElement.zero(group)
        assert (u + v) + w == u + (v + w)
        assert u + v == v + u
        assert u + zero == u
        assert u + (-u) == zero
        assert add(u, v) == u + v

    laws()


@pytest.mark.parametrize("group", list(GroupId))
def test_order_is_total_and_translation_invariant(group):
    @given(triples(group))
    def order(triple):
        u, v, w = triple
        outcomes = [u < v, u == v, v < u]
        assert outcomes.count(True) == 1
        if u < v:
            assert u + w < v + w
            assert compare(u, v) == Ordering.LESS
        assert compare(u, u) == Ordering.EQUAL
        assert (u.sign > 0) == (GroupElement.zero(group) < u)

    order()


@pytest.mark.parametrize("group", list(GroupId))
def test_canonical_literal_reparses(group):
    @given(elements(group))
    def reparse(u):
        assert parse_element(group, str(u)) == u

    reparse()


@pytest.mark.parametrize(
    "value,expected",
    [
        ((0, 0), 0),
        ((-1, 1), 1),
        ((3, -2), 1),
        ((-3, 2), -1),
        ((7, -5), -1),
        ((-7, 5), 1),
        ((1, 0), 1),
        ((0, -1), -1),
    ],
)
def test_zsqrt2_sign(value, expected):
    assert GroupElement.of(GroupId.ZSQRT2, value).sign == expected


@given(st.integers(min_value=-10**9, max_value=10**9))
def test_sqrt2_floor_brackets(b):
    floor = floor_sqrt2_multiple(b)
    # floor <= b*sqrt(2) < floor + 1, compared on squares with signs
    assert GroupElement.of(GroupId.ZSQRT2, (-floor, b)).sign >= 0
    assert GroupElement.of(GroupId.ZSQRT2, (-floor - 1, b)).sign < 0
    assert ceil_sqrt2_multiple(b) == floor + 1 or b == 0


def test_mixed_groups_raise():
    with pytest.raises(DomainError):
        _ = GroupElement.from_int(GroupId.INT, 1) + GroupElement.from_int(GroupId.RATIONAL, 1)
    with pytest.raises(DomainError):
        compare(GroupElement.from_int(GroupId.DYADIC, 1), GroupElement.from_int(GroupId.TRIADIC, 1))


def test_multiplication_only_in_the_field():
    half = parse_element(GroupId.RATIONAL, "1/2")
    third = parse_element(GroupId.RATIONAL, "1/3")
    assert str(half * third) == "1/6"
    assert str(half / third) == "3/2"
    with pytest.raises(DomainError):
        _ = GroupElement.from_int(GroupId.INT, 2) * GroupElement.from_int(GroupId.INT, 3)
    with pytest.raises(DomainError):
        _ = half / GroupElement.zero(GroupId.RATIONAL)


def test_integer_scaling():
    u = parse_element(GroupId.ZSQRT2, "1,-1")
    assert 3 * u == u * 3 == parse_element(GroupId.ZSQRT2, "3,-3")


@pytest.mark.parametrize("lambda0", range(1, 201))
def test_integer_max_half_matches_enumeration(lambda0):
    brute = max(t for t in range(lambda0 + 1) if 2 * t <= lambda0)
    result = max_half(GroupElement.from_int(GroupId.INT, lambda0))
    assert result.exists
    assert result.maximum == GroupElement.from_int(GroupId.INT, brute)


@pytest.mark.parametrize(
    "group,text,expected",
    [
        (GroupId.INT, "7", "3"),
        (GroupId.RATIONAL, "3/5", "3/10"),
        (GroupId.DYADIC, "1", "1/2^1"),
        (GroupId.DYADIC, "3/2^4", "3/2^5"),
        (GroupId.TRIADIC, "2/3^2", "1/3^2"),
        (GroupId.TRIADIC, "1", None),
        (GroupId.TRIADIC, "5/3^3", None),
        (GroupId.ZSQRT2, "2,4", "1,2"),
        (GroupId.ZSQRT2, "1,0", None),
        (GroupId.ZSQRT2, "2,1", None),
        (GroupId.LEX_INT, "2:5", "1:2"),
        (GroupId.LEX_INT, "1:0", None),
    ],
)
def test_max_half(group, text, expected):
    result = max_half(parse_element(group, text))
    if expected is None:
        assert not result.exists
    else:
        assert str(result.maximum) == expected


def test_max_half_requires_positive():
    with pytest.raises(PreconditionError):
        max_half(GroupElement.zero(GroupId.INT))
    with pytest.raises(PreconditionError):
        max_half(parse_element(GroupId.LEX_INT, "0:-1"))


def test_try_halve():
    assert try_halve(parse_element(GroupId.INT, "7")) is None
    assert str(try_halve(parse_element(GroupId.INT, "8"))) == "4"
    assert try_halve(parse_element(GroupId.TRIADIC, "1")) is None
    # zero lies in 2 * group everywhere
    for group in GroupId:
        assert try_halve(GroupElement.zero(group)) == GroupElement.zero(group)


@pytest.mark.parametrize("group", list(GroupId))
def test_halvable_elements_have_their_half_as_maximum(group):
    @given(elements(group))
    def halves(u):
        if u.sign <= 0:
            return
        half = try_halve(u)
        if half is not None:
            assert half + half == u
            assert max_half(u).maximum == half

    halves()


def test_triadic_chain():
    chain = iter_half_chain(parse_element(GroupId.TRIADIC, "1"))
    assert [str(next(chain)) for _ in range(3)] == ["1/3^1", "4/3^2", "13/3^3"]


def test_lex_chain():
    chain = iter_half_chain(parse_element(GroupId.LEX_INT, "1:0"))
    assert [str(next(chain)) for _ in range(3)] == ["0:0", "0:1", "0:2"]


def test_zsqrt2_chain_exceeds_every_box_candidate():
    one = GroupElement.from_int(GroupId.ZSQRT2, 1)
    chain = iter_half_chain(one)
    chain_elements = [next(chain) for _ in range(20)]
    assert all(earlier < later for earlier, later in zip(chain_elements, chain_elements[1:]))
    assert all(t * 2 < one for t in chain_elements)

    candidates = [
        GroupElement.of(GroupId.ZSQRT2, (a, b))
        for a in range(-10, 11)
        for b in range(-10, 11)
        if GroupElement.of(GroupId.ZSQRT2, (a, b)) * 2 <= one
    ]
    top = chain_elements[-1]
    assert all(candidate < top for candidate in candidates)


def test_half_maximal_groups_have_no_chain():
    with pytest.raises(PreconditionError):
        next(iter_half_chain(GroupElement.from_int(GroupId.DYADIC, 1)))
    assert get_group(GroupId.RATIONAL).always_half_maximal
    assert not get_group(GroupId.TRIADIC).always_half_maximal


@pytest.mark.parametrize("group", list(GroupId))
def test_random_sampling_is_seeded_and_bounded(group):
    first = [random_element(group, derive_rng(3, "element", index), 64, 3) for index in range(50)]
    second = [random_element(group, derive_rng(3, "element", index), 64, 3) for index in range(50)]
    assert first == second

    lo, hi = GroupElement.from_int(group, -2), GroupElement.from_int(group, 5)
    for index in range(200):
        value = random_between(derive_rng(3, "between", index), lo, hi, 64, 3)
        assert lo <= value <= hi


def test_random_between_empty_interval():
    with pytest.raises(PreconditionError):
        random_between(
            derive_rng(0),
            GroupElement.from_int(GroupId.INT, 2),
            GroupElement.from_int(GroupId.INT, 1),
            10,
            3,
        )


def test_power_denominator_rejects_foreign_fractions():
    dyadic = get_group(GroupId.DYADIC)
    assert dyadic.contains_fraction(Fraction(3, 8))
    assert not dyadic.contains_fraction(Fraction(1, 3))
    with pytest.raises(DomainError):
        dyadic.from_fraction(Fraction(1, 6))


@pytest.mark.parametrize(
    "group,u,v,expected",
    [
        (GroupId.INT, "7", "3", 2),
        (GroupId.INT, "-7", "3", -3),
        (GroupId.RATIONAL, "7/2", "1/3", 10),
        (GroupId.TRIADIC, "-1/3^2", "1", -1),
        (GroupId.ZSQRT2, "0,1", "1,0", 1),
        (GroupId.ZSQRT2, "5,0", "1,1", 2),
        (GroupId.ZSQRT2, "1,0", "-1,1", 2),
        (GroupId.ZSQRT2, "0,1000", "3,0", 471),
        (GroupId.LEX_INT, "0:7", "0:2", 3),
        (GroupId.LEX_INT, "0:-7", "0:2", -4),
        (GroupId.LEX_INT, "3:5", "1:2", 2),
        (GroupId.LEX_INT, "3:7", "1:2", 3),
        (GroupId.LEX_INT, "7:0", "2:9", 3),
        (GroupId.LEX_INT, "1:0", "0:1", None),
        (GroupId.LEX_INT, "-1:0", "0:5", None),
    ],
)
def test_floor_quotient(group, u, v, expected):
    assert floor_quotient(parse_element(group, u), parse_element(group, v)) == expected


@pytest.mark.parametrize("group", list(GroupId))
def test_floor_quotient_brackets(group):
    @given(elements(group), elements(group))
    def brackets(u, v):
        if v.sign <= 0:
            return
        k = floor_quotient(u, v)
        if k is None:
            assert group == GroupId.LEX_INT
            assert v.value[0] == 0 and u.value[0] != 0
        else:
            assert v * k <= u < v * (k + 1)

    brackets()


def test_floor_quotient_requires_positive_divisor():
    with pytest.raises(PreconditionError):
        floor_quotient(GroupElement.from_int(GroupId.INT, 3), GroupElement.zero(GroupId.INT))
    with pytest.raises(PreconditionError):
        floor_quotient(parse_element(GroupId.LEX_INT, "1:0"), parse_element(GroupId.LEX_INT, "0:-1"))


def sqrt2_convergents(min_denominator: int, count: int) -> list[tuple[int, int]]:
    """
    Continued-fraction convergents p/q of sqrt(2) with q above a bound.
    """
    p, q = 1, 1
    found = []
    while len(found) < count:
        p, q = p + 2 * q, p + q
        if q > min_denominator:
            found.append((p, q))
    return found


@pytest.mark.parametrize("p,q", sqrt2_convergents(10**6, 12))
def test_zsqrt2_order_against_rational_sandwich(p, q):
    # convergents alternate sides of sqrt(2); the side is decided by p^2 against 2q^2
    below = p * p < 2 * q * q
    root_multiple = GroupElement.of(GroupId.ZSQRT2, (0, q))
    integer = GroupElement.from_int(GroupId.ZSQRT2, p)
    assert (integer < root_multiple) == below
    assert GroupElement.of(GroupId.ZSQRT2, (-p, q)).sign == (1 if below else -1)
    assert get_group(GroupId.ZSQRT2).floor((0, q)) == (p if below else p - 1)


def test_zsqrt2_root_two_has_no_half_maximum_in_a_box():
    root = parse_element(GroupId.ZSQRT2, "0,1")
    assert not max_half(root).exists
    step = parse_element(GroupId.ZSQRT2, "-1,1")
    chain = iter_half_chain(root)
    top = [next(chain) for _ in range(40)][-1]
    assert top * 2 < root

    for a in range(-50, 51):
        for b in range(-50, 51):
            t = GroupElement.of(GroupId.ZSQRT2, (a, b))
            if t * 2 > root:
                continue
            assert t * 2 < root
            assert t < top
            # some power of sqrt(2) - 1 still fits between t and root / 2
            improvement = step
            while (t + improvement) * 2 >= root:
                improvement = GroupElement.of(GroupId.ZSQRT2, multiply(improvement.value, step.value))
            assert t < t + improvement


@pytest.mark.parametrize(
    "group,text",
    [
        (GroupId.INT, "7"),
        (GroupId.TRIADIC, "1"),
        (GroupId.TRIADIC, "5/3^3"),
        (GroupId.ZSQRT2, "1,0"),
        (GroupId.ZSQRT2, "0,1"),
        (GroupId.LEX_INT, "1:0"),
    ],
)
def test_unhalvable_elements_are_no_doubles(group, text):
    t = parse_element(group, text)
    assert try_halve(t) is None
    for index in range(1000):
        candidate = random_element(group, derive_rng(11, "double", index), 64, 3)
        assert candidate + candidate != t


@pytest.mark.parametrize(
    "group,text",
    [
        (GroupId.INT, "7"),
        (GroupId.RATIONAL, "3/5"),
        (GroupId.DYADIC, "3/2^4"),
        (GroupId.TRIADIC, "2/3^2"),
        (GroupId.ZSQRT2, "2,4"),
        (GroupId.LEX_INT, "2:5"),
    ],
)
def test_max_half_bounds_the_half_set(group, text):
    lambda0 = parse_element(group, text)
    maximum = max_half(lambda0).maximum
    zero = GroupElement.zero(group)
    members = 0
    for index in range(1000):
        s = random_between(derive_rng(13, "half-set", index), zero, lambda0, 64, 3)
        if s * 2 <= lambda0:
            members += 1
            assert s <= maximum
    assert members > 0
