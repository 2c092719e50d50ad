"""Exception types shared across the package.

The CLI maps these onto exit codes, so library code raises the most
specific one that applies instead of bare ValueError.
"""


class SpecError(ValueError):
    """Invalid construction parameters, guards, or malformed handle specs."""


class DomainMismatchError(SpecError):
    """Operands (or literals) belong to different coefficient domains."""


class ParseError(SpecError):
    """Syntax error in an expression or literal.

    position is a 0-based character offset into the original text.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.bare_message = message
