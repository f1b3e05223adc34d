"""
Build spaces from their kind and parameters, from command-line descriptions, from
tree edge-list files, and at random.

Command-line descriptions:

    interval:a..b   tree:@file   tree:random   x1:λ0   x2   x3:a   l1grid:side
"""

# imports
import random
from pathlib import Path
from typing import Any, Optional

# project
from lambda_trees.config import CONFIG
from lambda_trees.errors import ConfigError, LambdaTreesError
from lambda_trees.groups import GroupElement, GroupId, parse_element, random_element
from lambda_trees.logger import LOGGER
from lambda_trees.spaces.base_space import BaseSpace, SpaceKind, default_numerator_bound
from lambda_trees.spaces.interval_space import IntervalSpace
from lambda_trees.spaces.l1grid_space import L1GridSpace
from lambda_trees.spaces.space_types import TreeEdge
from lambda_trees.spaces.tree_space import TreeSpace
from lambda_trees.spaces.x1_space import X1Space
from lambda_trees.spaces.x2_space import X2Space
from lambda_trees.spaces.x3_space import X3Space
from lambda_trees.utils.random_utils import derive_rng

# largest random tree
DEFAULT_MAX_VERTICES = 12


def get_space(kind: SpaceKind | str, group: GroupId | str, **params: Any) -> BaseSpace:
    """
    Get a space for the given kind and parameters.

    Args:
        kind: Space kind.
        group: Group ID.
        **params: Kind-specific parameters (lower/upper, vertices/edges, lambda0, a, side).

    Returns:
        BaseSpace: The space.
    """
    try:
        kind = SpaceKind(kind)
    except ValueError as error:
        raise ConfigError(f"Invalid space kind: {kind}") from error
    group = GroupId.parse(group) if not isinstance(group, GroupId) else group

    if kind == SpaceKind.INTERVAL:
        return IntervalSpace(group, params["lower"], params["upper"])
    if kind == SpaceKind.TREE:
        return TreeSpace(group, params["vertices"], params["edges"], params.get("name", "tree"))
    if kind == SpaceKind.X1:
        return X1Space(group, params["lambda0"])
    if kind == SpaceKind.X2:
        return X2Space(group)
    if kind == SpaceKind.X3:
        return X3Space(group, params["a"])
    return L1GridSpace(group, params["side"])


def _element(group: GroupId, text: str, what: str) -> GroupElement:
    """
    Parse a parameter literal, reporting failures as configuration errors.
    """
    try:
        return parse_element(group, text)
    except LambdaTreesError as error:
        raise ConfigError(f"invalid {what}: {error}") from error


def parse_space_spec(group: GroupId | str, spec: str, seed: int = 0) -> BaseSpace:
    """
    Build a space from its command-line description.

    Args:
        group: Group ID.
        spec (str): Description such as "x1:1" or "interval:0..10".
        seed (int): Seed for "tree:random".

    Returns:
        BaseSpace: The space.
    """
    group = GroupId.parse(group) if not isinstance(group, GroupId) else group
    kind_text, _, argument = spec.partition(":")
    try:
        kind = SpaceKind(kind_text)
    except ValueError as error:
        names = ", ".join(member.value for member in SpaceKind)
        raise ConfigError(f"Invalid space kind: {kind_text} (expected one of {names})") from error

    LOGGER.info("Building space %s over %s", spec, group.value)
    if kind == SpaceKind.INTERVAL:
        lower, separator, upper = argument.partition("..")
        if not separator:
            raise ConfigError(f"interval expects interval:a..b, got {spec}")
        return IntervalSpace(group, _element(group, lower, "interval start"), _element(group, upper, "interval end"))
    if kind == SpaceKind.TREE:
        if argument == "random":
            return random_tree(group, derive_rng(seed, "tree"))
        if not argument.startswith("@"):
            raise ConfigError(f"tree expects tree:@file or tree:random, got {spec}")
        return parse_tree_file(group, Path(argument[1:]))
    if kind == SpaceKind.X1:
        return X1Space(group, _element(group, argument, "x1 λ0"))
    if kind == SpaceKind.X2:
        if argument:
            raise ConfigError(f"x2 takes no parameter, got {spec}")
        return X2Space(group)
    if kind == SpaceKind.X3:
        return X3Space(group, _element(group, argument, "x3 a"))
    return L1GridSpace(group, _element(group, argument, "l1grid side"))


def parse_tree_text(group: GroupId, text: str, name: str = "tree") -> TreeSpace:
    """
    Parse an edge list: one "u v length" per line; blank lines and lines starting
    with # are skipped. Edge ids follow line order.

    Args:
        group (GroupId): Group of the lengths.
        text (str): Edge-list text.
        name (str): Name used in descriptions.

    Returns:
        TreeSpace: The tree.
    """
    vertices: list[str] = []
    edges: list[TreeEdge] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ConfigError(f"{name}:{line_number}: expected 'u v length', got {line!r}")
        u, v, length = fields
        for vertex in (u, v):
            if vertex not in vertices:
                vertices.append(vertex)
        edges.append(TreeEdge(u, v, _element(group, length, f"length on line {line_number}")))
    return TreeSpace(group, vertices, edges, name=name)


def parse_tree_file(group: GroupId, path: Path) -> TreeSpace:
    """
    Read a tree edge-list file.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"cannot read tree file {path}: {error}") from error
    return parse_tree_text(group, text, name=f"@{path}")


def random_tree(
    group: GroupId,
    rng: random.Random,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    bound: Optional[int] = None,
) -> TreeSpace:
    """
    Random simplicial tree: each new vertex hangs off a uniformly chosen earlier one
    by an edge of random positive length.

    Args:
        group (GroupId): Group of the lengths.
        rng (random.Random): Random stream.
        max_vertices (int): Largest vertex count.
        bound (int): Numerator bound for lengths.

    Returns:
        TreeSpace: The tree.
    """
    bound = bound if bound is not None else default_numerator_bound(group)
    size = rng.randint(2, max(2, max_vertices))
    vertices = [f"v{index}" for index in range(size)]
    edges = []
    for index in range(1, size):
        length = abs(random_element(group, rng, bound, CONFIG.default_mean_exponent))
        while length.is_zero():
            length = abs(random_element(group, rng, bound, CONFIG.default_mean_exponent))
        edges.append(TreeEdge(vertices[rng.randrange(index)], vertices[index], length))
    return TreeSpace(group, vertices, edges, name="random")
