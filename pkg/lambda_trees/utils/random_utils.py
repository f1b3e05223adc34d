"""
Seeded pseudo-random streams.

Every sample in a check draws from its own stream derived from
(seed, labels..., index), so results do not depend on evaluation order.
"""

# imports
import hashlib
import random


def derive_seed(seed: int, *labels: object) -> int:
    """
    Derive a 64-bit integer seed from a base seed and a sequence of labels.

    Args:
        seed (int): Base seed.
        *labels: Labels identifying the stream (check name, sample index, ...).

    Returns:
        int: The derived seed.
    """
    key = ":".join([str(seed), *(str(label) for label in labels)])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def derive_rng(seed: int, *labels: object) -> random.Random:
    """
    Get a PRNG for the stream identified by (seed, labels).

    Args:
        seed (int): Base seed.
        *labels: Labels identifying the stream.

    Returns:
        random.Random: An independent generator.
    """
    return random.Random(derive_seed(seed, *labels))


def geometric(rng: random.Random, mean: int) -> int:
    """
    Draw a geometric variate on {0, 1, 2, ...} with the given mean using only
    integer draws.

    Args:
        rng (random.Random): Generator.
        mean (int): Mean of the distribution; success probability is 1 / (mean + 1).

    Returns:
        int: The variate.
    """
    value = 0
    while rng.randrange(mean + 1) != 0:
        value += 1
    return value
