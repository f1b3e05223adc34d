"""
Element literal grammar shared by all groups.

    int       -?digits
    rational  p/q or p
    dyadic    p/2^k or p
    triadic   p/3^k or p
    zsqrt2    a,b        (a + b*sqrt(2))
    lex-int   x:y
"""

# imports
import re

# project
from lambda_trees.errors import GroupParseError
from lambda_trees.groups.base_group import GroupElement, GroupId, get_group

# module regex patterns
RE_INT = re.compile(r"-?\d+")
RE_RATIONAL = re.compile(r"(-?\d+)(?:/(-?\d+))?")
RE_DYADIC = re.compile(r"(-?\d+)(?:/2\^(\d+))?")
RE_TRIADIC = re.compile(r"(-?\d+)(?:/3\^(\d+))?")
RE_ZSQRT2 = re.compile(r"(-?\d+),(-?\d+)")
RE_LEX_INT = re.compile(r"(-?\d+):(-?\d+)")


def match_literal(pattern: re.Pattern, text: str, what: str) -> re.Match:
    """
    Match a full literal, reporting the end of the longest valid prefix on failure.

    Args:
        pattern (re.Pattern): Grammar of the literal.
        text (str): The literal.
        what (str): Name of the literal kind for the message.

    Returns:
        re.Match: The full match.
    """
    match = pattern.fullmatch(text)
    if match is not None:
        return match

    position = 0
    for end in range(len(text) - 1, 0, -1):
        if pattern.fullmatch(text[:end]):
            position = end
            break
    raise GroupParseError(f"malformed {what} literal", text, position)


def parse_element(group: GroupId | str, text: str) -> GroupElement:
    """
    Parse an element literal into canonical form.

    Args:
        group: The group ID.
        text (str): The literal.

    Returns:
        GroupElement: The parsed element.
    """
    return GroupElement.parse(group, text.strip())


def format_element(element: GroupElement) -> str:
    """
    Emit the canonical literal of an element.
    """
    return get_group(element.group).format(element.value)
