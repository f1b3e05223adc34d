"""
Subgroups of the rationals: the integers, the rationals themselves, and the
power-denominator rings Z[1/2] and Z[1/3].

All four share exact Fraction arithmetic and differ in which denominators are
admissible and how a value tuple is laid out.
"""

# imports
import abc
import math
import random
import re
from fractions import Fraction
from typing import Iterator, Optional

# project
from lambda_trees.errors import DomainError, GroupParseError
from lambda_trees.groups.base_group import BaseGroup, GroupId, Value, register_group
from lambda_trees.groups.group_codec import (
    RE_DYADIC,
    RE_INT,
    RE_RATIONAL,
    RE_TRIADIC,
    match_literal,
)
from lambda_trees.utils.random_utils import geometric

# attempts at finding an admissible numerator before falling back to an endpoint
RANDOM_BETWEEN_ATTEMPTS = 32


class FractionalGroup(BaseGroup, abc.ABC):
    """
    A subgroup of Q with exact Fraction arithmetic.
    """

    @abc.abstractmethod
    def to_fraction(self, value: Value) -> Fraction:
        """
        Exact rational value of a canonical tuple.
        """

    @abc.abstractmethod
    def from_fraction(self, fraction: Fraction) -> Value:
        """
        Canonical tuple of a rational, raising DomainError when it is not in the group.
        """

    @abc.abstractmethod
    def draw_denominator(self, rng: random.Random, mean_exponent: int) -> int:
        """
        Draw an admissible denominator for random sampling.
        """

    def contains_fraction(self, fraction: Fraction) -> bool:
        """
        Whether a rational lies in the group.
        """
        try:
            self.from_fraction(fraction)
        except DomainError:
            return False
        return True

    def normalize(self, value: Value) -> Value:
        return self.from_fraction(self.to_fraction(value))

    def add(self, u: Value, v: Value) -> Value:
        return self.from_fraction(self.to_fraction(u) + self.to_fraction(v))

    def negate(self, u: Value) -> Value:
        return self.from_fraction(-self.to_fraction(u))

    def sign(self, u: Value) -> int:
        numerator = u[0]
        return (numerator > 0) - (numerator < 0)

    def scale(self, u: Value, n: int) -> Value:
        return self.from_fraction(self.to_fraction(u) * n)

    def from_int(self, n: int) -> Value:
        return self.from_fraction(Fraction(n))

    def try_halve(self, u: Value) -> Optional[Value]:
        half = self.to_fraction(u) / 2
        if not self.contains_fraction(half):
            return None
        return self.from_fraction(half)

    def max_half(self, u: Value) -> Optional[Value]:
        return self.try_halve(u)

    def floor_quotient(self, u: Value, v: Value) -> Optional[int]:
        return math.floor(self.to_fraction(u) / self.to_fraction(v))

    def random_element(self, rng: random.Random, bound: int, mean_exponent: int) -> Value:
        denominator = self.draw_denominator(rng, mean_exponent)
        numerator = rng.randint(-bound, bound)
        return self.from_fraction(Fraction(numerator, denominator))

    def random_between(
        self, rng: random.Random, lo: Value, hi: Value, bound: int, mean_exponent: int
    ) -> Value:
        low, high = self.to_fraction(lo), self.to_fraction(hi)
        for _ in range(RANDOM_BETWEEN_ATTEMPTS):
            denominator = self.draw_denominator(rng, mean_exponent)
            first, last = math.ceil(low * denominator), math.floor(high * denominator)
            if first <= last:
                return self.from_fraction(Fraction(rng.randint(first, last), denominator))
        return lo if rng.randrange(2) == 0 else hi


@register_group
class IntegerGroup(FractionalGroup):
    """
    The integers Z; value tuple (n,).
    """

    group_id = GroupId.INT
    description = "ℤ"
    always_half_maximal = True

    def to_fraction(self, value: Value) -> Fraction:
        return Fraction(value[0])

    def from_fraction(self, fraction: Fraction) -> Value:
        if fraction.denominator != 1:
            raise DomainError(f"{fraction} is not an integer")
        return (fraction.numerator,)

    def draw_denominator(self, rng: random.Random, mean_exponent: int) -> int:
        return 1

    def max_half(self, u: Value) -> Optional[Value]:
        return (u[0] // 2,)

    def parse(self, text: str) -> Value:
        match = match_literal(RE_INT, text, "int")
        return (int(match.group(0)),)

    def format(self, value: Value) -> str:
        return str(value[0])


@register_group
class RationalGroup(FractionalGroup):
    """
    The rationals Q, the only ordered field in the collection; value tuple (p, q)
    with q > 0 and gcd(p, q) = 1.
    """

    group_id = GroupId.RATIONAL
    description = "ℚ"
    is_field = True
    always_half_maximal = True

    def to_fraction(self, value: Value) -> Fraction:
        return Fraction(value[0], value[1])

    def from_fraction(self, fraction: Fraction) -> Value:
        return (fraction.numerator, fraction.denominator)

    def draw_denominator(self, rng: random.Random, mean_exponent: int) -> int:
        return rng.randint(1, 6 ** geometric(rng, mean_exponent))

    def multiply(self, u: Value, v: Value) -> Value:
        return self.from_fraction(self.to_fraction(u) * self.to_fraction(v))

    def divide(self, u: Value, v: Value) -> Value:
        divisor = self.to_fraction(v)
        if divisor == 0:
            raise DomainError("division by zero")
        return self.from_fraction(self.to_fraction(u) / divisor)

    def parse(self, text: str) -> Value:
        match = match_literal(RE_RATIONAL, text, "rational")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise GroupParseError("zero denominator", text, match.start(2))
        return self.from_fraction(Fraction(numerator, denominator))

    def format(self, value: Value) -> str:
        numerator, denominator = value
        return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


class PowerDenominatorGroup(FractionalGroup, abc.ABC):
    """
    The ring Z[1/base] for a prime base; value tuple (p, k) meaning p / base^k with
    k >= 0 and (k = 0 or base does not divide p).
    """

    base: int

    def to_fraction(self, value: Value) -> Fraction:
        numerator, exponent = value
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent} in {self.group_id.value} value")
        return Fraction(numerator, self.base**exponent)

    def from_fraction(self, fraction: Fraction) -> Value:
        denominator, exponent = fraction.denominator, 0
        while denominator % self.base == 0:
            denominator //= self.base
            exponent += 1
        if denominator != 1:
            raise DomainError(f"{fraction} is not in {self.group_id.value}")
        return (fraction.numerator, exponent)

    def draw_denominator(self, rng: random.Random, mean_exponent: int) -> int:
        return self.base ** geometric(rng, mean_exponent)

    def parse(self, text: str) -> Value:
        match = match_literal(self.pattern(), text, self.group_id.value)
        numerator = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 0
        return self.from_fraction(Fraction(numerator, self.base**exponent))

    def format(self, value: Value) -> str:
        numerator, exponent = value
        return str(numerator) if exponent == 0 else f"{numerator}/{self.base}^{exponent}"

    @abc.abstractmethod
    def pattern(self) -> re.Pattern:
        """
        Literal grammar of the group.
        """


@register_group
class DyadicGroup(PowerDenominatorGroup):
    """
    Dyadic rationals Z[1/2]; every element is divisible by 2.
    """

    group_id = GroupId.DYADIC
    description = "ℤ[1/2]"
    base = 2
    always_half_maximal = True

    def pattern(self) -> re.Pattern:
        return RE_DYADIC


@register_group
class TriadicGroup(PowerDenominatorGroup):
    """
    Triadic rationals Z[1/3]. The group is order-dense but p/3^k with p odd has no
    half, so {t : 0 <= 2t <= p/3^k} has no maximum.
    """

    group_id = GroupId.TRIADIC
    description = "ℤ[1/3]"
    base = 3

    def pattern(self) -> re.Pattern:
        return RE_TRIADIC

    def iter_half_chain(self, u: Value) -> Iterator[Value]:
        # t_n = ((p * 3^n - 1) / 2) / 3^(k + n) approaches p / (2 * 3^k) from below
        numerator, exponent = u
        if self.try_halve(u) is not None or numerator <= 0:
            yield from super().iter_half_chain(u)
            return
        n = 1
        while True:
            yield self.from_fraction(Fraction((numerator * 3**n - 1) // 2, 3 ** (exponent + n)))
            n += 1
