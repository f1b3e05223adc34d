"""
Exception types shared by the groups, spaces, checker and cli packages.
"""


class LambdaTreesError(ValueError):
    """
    Base class for all lambda_trees errors.
    """


class DomainError(LambdaTreesError):
    """
    Raised when values from different groups or spaces are combined, or an
    operation is not defined for a group.
    """


class PreconditionError(LambdaTreesError):
    """
    Raised when an operation precondition does not hold.
    """


class RangeError(LambdaTreesError):
    """
    Raised when a segment parameter lies outside [0, D].
    """


class GroupParseError(LambdaTreesError):
    """
    Raised when a group or point literal does not match its grammar.
    """

    def __init__(self, message: str, text: str, position: int):
        """
        Initialize the parse error.

        Args:
            message (str): What went wrong.
            text (str): The literal being parsed.
            position (int): Offset of the first offending character.
        """
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class ConfigError(LambdaTreesError):
    """
    Raised for invalid command-line or space configuration.
    """
