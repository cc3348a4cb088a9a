"""
Exceptions raised while parsing and evaluating expressions.
"""


class ExprSyntaxError(ValueError):
    """Raised when an expression does not follow the grammar.

    ``offset`` is None for nodes built in code rather than parsed from text.
    """

    def __init__(
        self, message: str, offset: int | None, expected: frozenset[str] = frozenset()
    ):
        self.offset = offset
        self.expected = expected
        detail = message if offset is None else f"{message} at byte {offset}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)


class UnknownIdentifierError(ExprSyntaxError):
    """Raised for identifiers outside the supported variable/function set."""

    def __init__(
        self, name: str, offset: int | None = None, expected: frozenset[str] = frozenset()
    ):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", offset, expected)


class EvaluationDomainError(ArithmeticError):
    """Raised when evaluation hits a division by zero."""
