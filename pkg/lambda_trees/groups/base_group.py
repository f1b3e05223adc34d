"""
Base group to standardize exact arithmetic and order across all concrete
ordered abelian groups.
"""

# future imports
from __future__ import annotations

# imports
import abc
import functools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Type

# project
from lambda_trees.errors import DomainError, PreconditionError


class GroupId(str, Enum):
    """
    Identifiers of the supported ordered abelian groups.
    """

    INT = "int"
    RATIONAL = "rational"
    DYADIC = "dyadic"
    TRIADIC = "triadic"
    ZSQRT2 = "zsqrt2"
    LEX_INT = "lex-int"

    @classmethod
    def parse(cls, text: str) -> GroupId:
        """
        Get the group id for its command-line name.

        Args:
            text (str): Group name such as "triadic" or "lex-int".

        Returns:
            GroupId: The group id.
        """
        try:
            return cls(text)
        except ValueError as error:
            names = ", ".join(member.value for member in cls)
            raise DomainError(f"Invalid group ID: {text} (expected one of {names})") from error


class Ordering(Enum):
    """
    Outcome of a comparison.
    """

    LESS = -1
    EQUAL = 0
    GREATER = 1


Value = tuple[int, ...]

# registry of group implementations, filled by @register_group
_GROUPS: dict[GroupId, BaseGroup] = {}


def register_group(cls: Type[BaseGroup]) -> Type[BaseGroup]:
    """
    Class decorator that registers a singleton instance of a group implementation.

    Args:
        cls (Type[BaseGroup]): The group class.

    Returns:
        Type[BaseGroup]: The same class.
    """
    instance = cls()
    _GROUPS[instance.group_id] = instance
    return cls


def get_group(group_id: GroupId | str) -> BaseGroup:
    """
    Get the group implementation for the given group ID.

    Args:
        group_id: The group ID.

    Returns:
        BaseGroup: The group implementation.
    """
    if not isinstance(group_id, GroupId):
        group_id = GroupId.parse(group_id)
    return _GROUPS[group_id]


class BaseGroup(abc.ABC):
    """
    Exact arithmetic and total order on canonical value tuples of one group.

    Subclasses work on plain tuples; GroupElement wraps them with the group id
    and the operator protocol.
    """

    group_id: GroupId
    description: str

    # whether multiplication and division are available (ordered field)
    is_field: bool = False

    # whether every positive element has a half-maximum
    always_half_maximal: bool = False

    @abc.abstractmethod
    def normalize(self, value: Value) -> Value:
        """
        Bring a value tuple into canonical form.

        Args:
            value (Value): A possibly non-canonical value.

        Returns:
            Value: The canonical value.
        """

    @abc.abstractmethod
    def add(self, u: Value, v: Value) -> Value:
        """
        Exact sum of two canonical values.
        """

    @abc.abstractmethod
    def negate(self, u: Value) -> Value:
        """
        Additive inverse of a canonical value.
        """

    @abc.abstractmethod
    def sign(self, u: Value) -> int:
        """
        Sign of a canonical value: -1, 0 or 1.
        """

    @abc.abstractmethod
    def scale(self, u: Value, n: int) -> Value:
        """
        Integer multiple n * u.
        """

    @abc.abstractmethod
    def from_int(self, n: int) -> Value:
        """
        Image of the integer n in the group.
        """

    @abc.abstractmethod
    def try_halve(self, u: Value) -> Optional[Value]:
        """
        The value h with h + h = u, or None when u is not in 2 * group.
        """

    @abc.abstractmethod
    def max_half(self, u: Value) -> Optional[Value]:
        """
        Maximum of {t : 0 <= 2t <= u} for a positive u, or None when there is none.
        """

    @abc.abstractmethod
    def floor_quotient(self, u: Value, v: Value) -> Optional[int]:
        """
        The integer k with k * v <= u < (k + 1) * v for a positive v, or None when
        no integer multiple of v reaches u.
        """

    @abc.abstractmethod
    def parse(self, text: str) -> Value:
        """
        Parse a literal into a canonical value.
        """

    @abc.abstractmethod
    def format(self, value: Value) -> str:
        """
        Canonical literal of a value.
        """

    @abc.abstractmethod
    def random_element(self, rng: random.Random, bound: int, mean_exponent: int) -> Value:
        """
        Draw an element with numerators bounded by `bound`.
        """

    @abc.abstractmethod
    def random_between(
        self, rng: random.Random, lo: Value, hi: Value, bound: int, mean_exponent: int
    ) -> Value:
        """
        Draw an element of the closed interval [lo, hi].
        """

    def iter_half_chain(self, u: Value) -> Iterator[Value]:
        """
        Strictly increasing sequence inside {t : 0 <= 2t <= u}, for a u whose
        half-set has no maximum.

        Args:
            u (Value): A positive value with max_half(u) = None.

        Yields:
            Value: The chain elements.
        """
        raise PreconditionError(f"{self.group_id.value} has a half-maximum for every positive element")

    def multiply(self, u: Value, v: Value) -> Value:
        """
        Field product; only defined for ordered fields.
        """
        raise DomainError(f"{self.group_id.value} is not an ordered field: multiplication is undefined")

    def divide(self, u: Value, v: Value) -> Value:
        """
        Field quotient; only defined for ordered fields.
        """
        raise DomainError(f"{self.group_id.value} is not an ordered field: division is undefined")

    def compare(self, u: Value, v: Value) -> int:
        """
        Compare two canonical values.

        Returns:
            int: -1, 0 or 1.
        """
        return self.sign(self.add(u, self.negate(v)))


@functools.total_ordering
@dataclass(frozen=True)
class GroupElement:
    """
    An element of one of the concrete ordered abelian groups, in canonical form.
    """

    group: GroupId
    value: Value

    @property
    def impl(self) -> BaseGroup:
        """
        The group implementation.
        """
        return _GROUPS[self.group]

    @classmethod
    def of(cls, group: GroupId | str, value: Value) -> GroupElement:
        """
        Build an element from a possibly non-canonical value tuple.

        Args:
            group: The group ID.
            value (Value): The value tuple.

        Returns:
            GroupElement: The canonical element.
        """
        impl = get_group(group)
        return cls(impl.group_id, impl.normalize(tuple(value)))

    @classmethod
    def from_int(cls, group: GroupId | str, n: int) -> GroupElement:
        """
        Image of an integer.
        """
        impl = get_group(group)
        return cls(impl.group_id, impl.from_int(n))

    @classmethod
    def zero(cls, group: GroupId | str) -> GroupElement:
        """
        Identity element.
        """
        return cls.from_int(group, 0)

    @classmethod
    def parse(cls, group: GroupId | str, text: str) -> GroupElement:
        """
        Parse a literal in the group's grammar.
        """
        impl = get_group(group)
        return cls(impl.group_id, impl.parse(text))

    def _check(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement):
            raise DomainError(f"cannot combine {self!r} with {other!r}")
        if other.group != self.group:
            raise DomainError(f"mixed-group operation: {self.group.value} and {other.group.value}")

    def _wrap(self, value: Value) -> GroupElement:
        return GroupElement(self.group, value)

    @property
    def sign(self) -> int:
        """
        Sign of the element: -1, 0 or 1.
        """
        return self.impl.sign(self.value)

    def is_zero(self) -> bool:
        """
        Whether the element is the identity.
        """
        return self.sign == 0

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self._wrap(self.impl.add(self.value, other.value))

    def __neg__(self) -> GroupElement:
        return self._wrap(self.impl.negate(self.value))

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self._wrap(self.impl.add(self.value, self.impl.negate(other.value)))

    def __abs__(self) -> GroupElement:
        return -self if self.sign < 0 else self

    def __mul__(self, other: int | GroupElement) -> GroupElement:
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self._wrap(self.impl.scale(self.value, other))
        self._check(other)
        return self._wrap(self.impl.multiply(self.value, other.value))

    def __rmul__(self, other: int) -> GroupElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return self._wrap(self.impl.scale(self.value, other))
        return NotImplemented

    def __truediv__(self, other: int | GroupElement) -> GroupElement:
        if isinstance(other, int) and not isinstance(other, bool):
            other = GroupElement.from_int(self.group, other)
        self._check(other)
        if other.is_zero():
            raise DomainError("division by zero")
        return self._wrap(self.impl.divide(self.value, other.value))

    def __lt__(self, other: GroupElement) -> bool:
        self._check(other)
        return self.impl.compare(self.value, other.value) < 0

    def __str__(self) -> str:
        return self.impl.format(self.value)

    def __repr__(self) -> str:
        return f"GroupElement({self.group.value}, {self.impl.format(self.value)})"


@dataclass(frozen=True)
class HalfMaxResult:
    """
    Outcome of max_half: the maximum of {t : 0 <= 2t <= lambda0}, or none.
    """

    lambda0: GroupElement
    maximum: Optional[GroupElement] = None

    @property
    def exists(self) -> bool:
        """
        Whether the half-set has a maximum.
        """
        return self.maximum is not None


def compare(u: GroupElement, v: GroupElement) -> Ordering:
    """
    Compare two elements of the same group.

    Args:
        u (GroupElement): Left element.
        v (GroupElement): Right element.

    Returns:
        Ordering: LESS, EQUAL or GREATER.
    """
    # pylint: disable=protected-access
    u._check(v)
    return Ordering(u.impl.compare(u.value, v.value))


def add(u: GroupElement, v: GroupElement) -> GroupElement:
    """
    Exact sum of two elements of the same group.
    """
    return u + v


def try_halve(t: GroupElement) -> Optional[GroupElement]:
    """
    Decide whether t lies in 2 * group and return t / 2 when it does.

    Args:
        t (GroupElement): The element.

    Returns:
        Optional[GroupElement]: h with h + h = t, or None.
    """
    half = t.impl.try_halve(t.value)
    return None if half is None else GroupElement(t.group, half)


def max_half(lambda0: GroupElement) -> HalfMaxResult:
    """
    Decide whether {t : 0 <= 2t <= lambda0} has a maximum.

    Args:
        lambda0 (GroupElement): A positive element.

    Returns:
        HalfMaxResult: The maximum, or an empty result when the set has none.
    """
    if lambda0.sign <= 0:
        raise PreconditionError(f"max_half requires a positive element, got {lambda0}")
    maximum = lambda0.impl.max_half(lambda0.value)
    return HalfMaxResult(
        lambda0=lambda0,
        maximum=None if maximum is None else GroupElement(lambda0.group, maximum),
    )


def iter_half_chain(lambda0: GroupElement) -> Iterator[GroupElement]:
    """
    Iterate a strictly increasing chain inside {t : 0 <= 2t <= lambda0}.

    Args:
        lambda0 (GroupElement): A positive element whose half-set has no maximum.

    Yields:
        GroupElement: The chain elements.
    """
    for value in lambda0.impl.iter_half_chain(lambda0.value):
        yield GroupElement(lambda0.group, value)


def floor_quotient(u: GroupElement, v: GroupElement) -> Optional[int]:
    """
    The integer k with k * v <= u < (k + 1) * v.

    Args:
        u (GroupElement): The element to divide.
        v (GroupElement): A positive divisor.

    Returns:
        Optional[int]: k, or None when no integer multiple of v reaches u.
    """
    # pylint: disable=protected-access
    u._check(v)
    if v.sign <= 0:
        raise PreconditionError(f"floor_quotient requires a positive divisor, got {v}")
    return u.impl.floor_quotient(u.value, v.value)


def random_element(group: GroupId, rng: random.Random, bound: int, mean_exponent: int) -> GroupElement:
    """
    Draw a random element of a group.
    """
    impl = get_group(group)
    return GroupElement(impl.group_id, impl.random_element(rng, bound, mean_exponent))


def random_between(
    rng: random.Random, lo: GroupElement, hi: GroupElement, bound: int, mean_exponent: int
) -> GroupElement:
    """
    Draw a random element of the closed interval [lo, hi].
    """
    # pylint: disable=protected-access
    lo._check(hi)
    if hi < lo:
        raise PreconditionError(f"empty interval [{lo}, {hi}]")
    return GroupElement(lo.group, lo.impl.random_between(rng, lo.value, hi.value, bound, mean_exponent))
