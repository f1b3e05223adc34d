"""
The ring Z[sqrt(2)] as an ordered abelian group, with order decided by an exact
integer sign predicate.
"""

# imports
import math
import random
from typing import Iterator, Optional

# project
from lambda_trees.groups.base_group import BaseGroup, GroupId, Value, register_group
from lambda_trees.groups.group_codec import RE_ZSQRT2, match_literal

# attempts at finding an admissible rational coefficient before falling back to an endpoint
RANDOM_BETWEEN_ATTEMPTS = 32

# the unit sqrt(2) - 1, which lies in (0, 1)
UNIT = (-1, 1)


def floor_sqrt2_multiple(b: int) -> int:
    """
    Exact floor of b * sqrt(2).

    Args:
        b (int): Integer coefficient.

    Returns:
        int: floor(b * sqrt(2)).
    """
    if b == 0:
        return 0
    root = math.isqrt(2 * b * b)
    # 2b^2 is never a perfect square, so b*sqrt(2) is never an integer
    return root if b > 0 else -root - 1


def ceil_sqrt2_multiple(b: int) -> int:
    """
    Exact ceiling of b * sqrt(2).
    """
    return -floor_sqrt2_multiple(-b)


def multiply(u: Value, v: Value) -> Value:
    """
    Ring product (a1 + b1 r)(a2 + b2 r) with r = sqrt(2).
    """
    a1, b1 = u
    a2, b2 = v
    return (a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1)


@register_group
class Zsqrt2Group(BaseGroup):
    """
    Z[sqrt(2)]; value tuple (a, b) meaning a + b * sqrt(2).
    """

    group_id = GroupId.ZSQRT2
    description = "ℤ[√2]"

    def normalize(self, value: Value) -> Value:
        a, b = value
        return (int(a), int(b))

    def add(self, u: Value, v: Value) -> Value:
        return (u[0] + v[0], u[1] + v[1])

    def negate(self, u: Value) -> Value:
        return (-u[0], -u[1])

    def sign(self, u: Value) -> int:
        a, b = u
        if b == 0:
            return (a > 0) - (a < 0)
        if b > 0:
            return 1 if a >= 0 or a * a < 2 * b * b else -1
        return 1 if a > 0 and a * a > 2 * b * b else -1

    def scale(self, u: Value, n: int) -> Value:
        return (u[0] * n, u[1] * n)

    def from_int(self, n: int) -> Value:
        return (n, 0)

    def try_halve(self, u: Value) -> Optional[Value]:
        a, b = u
        if a % 2 or b % 2:
            return None
        return (a // 2, b // 2)

    def max_half(self, u: Value) -> Optional[Value]:
        # Z[sqrt(2)] is order-dense, so the supremum u/2 is attained only when it exists
        return self.try_halve(u)

    def floor(self, u: Value) -> int:
        """
        Exact floor of a + b * sqrt(2).
        """
        return u[0] + floor_sqrt2_multiple(u[1])

    def floor_quotient(self, u: Value, v: Value) -> Optional[int]:
        # u / v = u * conj(v) / N(v) with N(v) = c^2 - 2d^2 != 0
        c, d = v
        norm = c * c - 2 * d * d
        numerator = multiply(u, (c, -d))
        if norm < 0:
            numerator, norm = self.negate(numerator), -norm
        return self.floor(numerator) // norm

    def iter_half_chain(self, u: Value) -> Iterator[Value]:
        # greedy sums of powers of sqrt(2) - 1, each the largest that keeps 2t < u
        if self.try_halve(u) is not None or self.sign(u) <= 0:
            yield from super().iter_half_chain(u)
            return
        total: Value = (0, 0)
        power: Value = (1, 0)
        while True:
            candidate = self.add(total, power)
            if self.compare(self.scale(candidate, 2), u) < 0:
                total = candidate
                yield total
            else:
                power = multiply(power, UNIT)

    def random_element(self, rng: random.Random, bound: int, mean_exponent: int) -> Value:
        return (rng.randint(-bound, bound), rng.randint(-bound, bound))

    def random_between(
        self, rng: random.Random, lo: Value, hi: Value, bound: int, mean_exponent: int
    ) -> Value:
        # choose b near lo's coefficient, then a in [lo - b r, hi - b r]
        for _ in range(RANDOM_BETWEEN_ATTEMPTS):
            b = lo[1] + rng.randint(-bound, bound)
            first = lo[0] + ceil_sqrt2_multiple(lo[1] - b)
            last = hi[0] + floor_sqrt2_multiple(hi[1] - b)
            if first <= last:
                return (rng.randint(first, last), b)
        return lo if rng.randrange(2) == 0 else hi

    def parse(self, text: str) -> Value:
        match = match_literal(RE_ZSQRT2, text, "zsqrt2")
        return (int(match.group(1)), int(match.group(2)))

    def format(self, value: Value) -> str:
        return f"{value[0]},{value[1]}"
