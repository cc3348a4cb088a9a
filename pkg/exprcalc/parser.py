"""
Recursive-descent parser for the expression grammar.

Grammar (standard precedence, left associative + - * /):

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" exponent)?
    exponent := ["-" | "+"] INTEGER | "(" ["-" | "+"] INTEGER ")"
    atom     := NUMBER | "x" | "t" | "pi" | FUNC "(" expr ")" | "(" expr ")"
    FUNC     := "sin" | "cos" | "sinh" | "cosh" | "exp"
"""

import logging
import re
from dataclasses import dataclass

from exprcalc.errors import ExprSyntaxError, UnknownIdentifierError
from exprcalc.nodes import (
    FUNCTIONS,
    PI,
    VARIABLES,
    Const,
    Expr,
    Var,
    add,
    call,
    div,
    mul,
    neg,
    power,
    sub,
)

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_ATOM_START = frozenset({"number", "x", "t", "pi", "function", "(", "-", "+"})
_AFTER_OPERAND = frozenset({"+", "-", "*", "/", "^", ")", "end of input"})


@dataclass(frozen=True)
class Token:
    kind: str  # number, ident, op, end
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(src: str) -> list[Token]:
    """
    Split source text into tokens.

    Args:
        src: Expression text

    Returns:
        Token list terminated by an ``end`` token
    """
    tokens: list[Token] = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ExprSyntaxError(
                f"unexpected character {src[pos]!r}", _byte_offset(src, pos), _ATOM_START
            )
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(Token(kind, match.group(), _byte_offset(src, pos)))
        pos = match.end()
    tokens.append(Token("end", "", _byte_offset(src, len(src))))
    return tokens


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def _expect_op(self, op: str, expected: frozenset[str]) -> None:
        if not self._at_op(op):
            raise ExprSyntaxError(
                f"unexpected {self._describe(self.current)}", self.current.offset, expected
            )
        self._advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "end" else f"token {token.text!r}"

    def parse(self) -> Expr:
        result = self._expr()
        if self.current.kind != "end":
            raise ExprSyntaxError(
                f"unexpected {self._describe(self.current)}", self.current.offset, _AFTER_OPERAND
            )
        return result

    def _expr(self) -> Expr:
        left = self._term()
        while self._at_op("+", "-"):
            op = self._advance().text
            right = self._term()
            left = add(left, right) if op == "+" else sub(left, right)
        return left

    def _term(self) -> Expr:
        left = self._unary()
        while self._at_op("*", "/"):
            op = self._advance().text
            right = self._unary()
            left = mul(left, right) if op == "*" else div(left, right)
        return left

    def _unary(self) -> Expr:
        if self._at_op("-"):
            self._advance()
            return neg(self._unary())
        if self._at_op("+"):
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Expr:
        base = self._atom()
        if self._at_op("^"):
            self._advance()
            return power(base, self._exponent())
        return base

    def _exponent(self) -> int:
        if self._at_op("("):
            self._advance()
            value = self._signed_integer()
            self._expect_op(")", frozenset({")"}))
            return value
        return self._signed_integer()

    def _signed_integer(self) -> int:
        sign = 1
        if self._at_op("-", "+"):
            sign = -1 if self._advance().text == "-" else 1
        token = self.current
        if token.kind != "number" or not token.text.isdigit():
            raise ExprSyntaxError(
                "integer exponent required", token.offset, frozenset({"integer", "(", "-", "+"})
            )
        self._advance()
        return sign * int(token.text)

    def _atom(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Const(float(token.text))
        if token.kind == "ident":
            self._advance()
            if token.text in VARIABLES:
                return Var(token.text)  # type: ignore[arg-type]
            if token.text == "pi":
                return PI
            if token.text in FUNCTIONS:
                self._expect_op("(", frozenset({"("}))
                arg = self._expr()
                self._expect_op(")", frozenset({")", "+", "-", "*", "/", "^"}))
                return call(token.text, arg)
            raise UnknownIdentifierError(token.text, token.offset, _ATOM_START)
        if self._at_op("("):
            self._advance()
            inner = self._expr()
            self._expect_op(")", frozenset({")", "+", "-", "*", "/", "^"}))
            return inner
        raise ExprSyntaxError(f"unexpected {self._describe(token)}", token.offset, _ATOM_START)


def parse(src: str) -> Expr:
    """
    Parse expression text into an expression tree.

    Args:
        src: Text in the documented grammar, e.g. ``"sin(pi*x)*cos(pi*t)"``

    Returns:
        Parsed (constant-folded) expression

    Raises:
        ExprSyntaxError: On malformed input, with byte offset and expected tokens
        UnknownIdentifierError: On identifiers outside x, t, pi and the function set
    """
    expr = _Parser(src).parse()
    logger.debug(f"Parsed {src!r} -> {expr}")
    return expr
