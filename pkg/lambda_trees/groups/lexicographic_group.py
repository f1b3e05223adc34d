"""
Z x Z with the lexicographic order, the computable model of R x R lex.
"""

# imports
import random
from typing import Iterator, Optional

# project
from lambda_trees.groups.base_group import BaseGroup, GroupId, Value, register_group
from lambda_trees.groups.group_codec import RE_LEX_INT, match_literal


@register_group
class LexIntGroup(BaseGroup):
    """
    Z x Z, ordered by (x, y) < (x', y') iff x < x' or (x = x' and y < y').
    """

    group_id = GroupId.LEX_INT
    description = "ℤ×ℤ (lexicographic)"

    def normalize(self, value: Value) -> Value:
        x, y = value
        return (int(x), int(y))

    def add(self, u: Value, v: Value) -> Value:
        return (u[0] + v[0], u[1] + v[1])

    def negate(self, u: Value) -> Value:
        return (-u[0], -u[1])

    def sign(self, u: Value) -> int:
        x, y = u
        if x != 0:
            return 1 if x > 0 else -1
        return (y > 0) - (y < 0)

    def scale(self, u: Value, n: int) -> Value:
        return (u[0] * n, u[1] * n)

    def from_int(self, n: int) -> Value:
        return (n, 0)

    def try_halve(self, u: Value) -> Optional[Value]:
        x, y = u
        if x % 2 or y % 2:
            return None
        return (x // 2, y // 2)

    def max_half(self, u: Value) -> Optional[Value]:
        x, y = u
        if x % 2:
            # ((x - 1) / 2, m) is in the half-set for every m
            return None
        return (x // 2, y // 2)

    def floor_quotient(self, u: Value, v: Value) -> Optional[int]:
        x, y = u
        vx, vy = v
        if vx == 0:
            # multiples of (0, vy) never leave the first coordinate 0
            return y // vy if x == 0 else None
        k = x // vx
        if k * vx == x and k * vy > y:
            k -= 1
        return k

    def iter_half_chain(self, u: Value) -> Iterator[Value]:
        x = u[0]
        if x % 2 == 0 or x <= 0:
            yield from super().iter_half_chain(u)
            return
        m = 0
        while True:
            yield ((x - 1) // 2, m)
            m += 1

    def random_element(self, rng: random.Random, bound: int, mean_exponent: int) -> Value:
        return (rng.randint(-bound, bound), rng.randint(-bound, bound))

    def random_between(
        self, rng: random.Random, lo: Value, hi: Value, bound: int, mean_exponent: int
    ) -> Value:
        x = rng.randint(lo[0], hi[0])
        if x == lo[0] and x == hi[0]:
            return (x, rng.randint(lo[1], hi[1]))
        if x == lo[0]:
            return (x, rng.randint(lo[1], lo[1] + 2 * bound))
        if x == hi[0]:
            return (x, rng.randint(hi[1] - 2 * bound, hi[1]))
        return (x, rng.randint(-bound, bound))

    def parse(self, text: str) -> Value:
        match = match_literal(RE_LEX_INT, text, "lex-int")
        return (int(match.group(1)), int(match.group(2)))

    def format(self, value: Value) -> str:
        return f"{value[0]}:{value[1]}"
