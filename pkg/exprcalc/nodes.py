"""
Expression tree nodes for closed-form functions of (x, t).

This module provides:
- Immutable node types (constants, variables, pi, negation, calls, binary ops, powers)
- Folding constructors that keep derivative trees small
- A canonical printer whose output parses back to an equal-valued tree
"""

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

from exprcalc.errors import UnknownIdentifierError

Variable = Literal["x", "t"]
BinaryOp = Literal["+", "-", "*", "/"]

FUNCTIONS: dict[str, Callable[[float], float]] = {
    "sin": math.sin,
    "cos": math.cos,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "exp": math.exp,
}
VARIABLES: frozenset[str] = frozenset({"x", "t"})

# Printing precedence levels
_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5


class Expr:
    """Base class of every expression node."""

    precedence: int = _PREC_ATOM

    def __add__(self, other: "Expr | float") -> "Expr":
        return add(self, _coerce(other))

    def __radd__(self, other: float) -> "Expr":
        return add(_coerce(other), self)

    def __sub__(self, other: "Expr | float") -> "Expr":
        return sub(self, _coerce(other))

    def __rsub__(self, other: float) -> "Expr":
        return sub(_coerce(other), self)

    def __mul__(self, other: "Expr | float") -> "Expr":
        return mul(self, _coerce(other))

    def __rmul__(self, other: float) -> "Expr":
        return mul(_coerce(other), self)

    def __truediv__(self, other: "Expr | float") -> "Expr":
        return div(self, _coerce(other))

    def __rtruediv__(self, other: float) -> "Expr":
        return div(_coerce(other), self)

    def __neg__(self) -> "Expr":
        return neg(self)

    def __pow__(self, exponent: int) -> "Expr":
        return power(self, exponent)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True, repr=True)
class Const(Expr):
    value: float


@dataclass(frozen=True, eq=True, repr=True)
class Var(Expr):
    name: Variable


@dataclass(frozen=True, eq=True, repr=True)
class Pi(Expr):
    pass


@dataclass(frozen=True, eq=True, repr=True)
class Neg(Expr):
    operand: Expr
    precedence = _PREC_NEG


@dataclass(frozen=True, eq=True, repr=True)
class Call(Expr):
    func: str
    arg: Expr


@dataclass(frozen=True, eq=True, repr=True)
class BinOp(Expr):
    op: BinaryOp
    left: Expr
    right: Expr

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return _PREC_ADD if self.op in "+-" else _PREC_MUL


@dataclass(frozen=True, eq=True, repr=True)
class Pow(Expr):
    base: Expr
    exponent: int
    precedence = _PREC_POW


ZERO = Const(0.0)
ONE = Const(1.0)
X = Var("x")
T = Var("t")
PI = Pi()


def _coerce(value: "Expr | float") -> Expr:
    if isinstance(value, Expr):
        return value
    return Const(float(value))


def _is_const(e: Expr, value: float | None = None) -> bool:
    if not isinstance(e, Const):
        return False
    return value is None or e.value == value


# =========================================================================
# FOLDING CONSTRUCTORS
# =========================================================================


def add(left: Expr, right: Expr) -> Expr:
    if _is_const(left, 0.0):
        return right
    if _is_const(right, 0.0):
        return left
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value + right.value)
    if isinstance(right, Neg):
        return sub(left, right.operand)
    return BinOp("+", left, right)


def sub(left: Expr, right: Expr) -> Expr:
    if _is_const(right, 0.0):
        return left
    if _is_const(left, 0.0):
        return neg(right)
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value - right.value)
    if isinstance(right, Neg):
        return add(left, right.operand)
    return BinOp("-", left, right)


def mul(left: Expr, right: Expr) -> Expr:
    if _is_const(left, 0.0) or _is_const(right, 0.0):
        return ZERO
    if _is_const(left, 1.0):
        return right
    if _is_const(right, 1.0):
        return left
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value * right.value)
    if _is_const(left, -1.0):
        return neg(right)
    if _is_const(right, -1.0):
        return neg(left)
    if isinstance(left, Neg) and isinstance(right, Neg):
        return mul(left.operand, right.operand)
    if isinstance(left, Neg):
        return neg(mul(left.operand, right))
    if isinstance(right, Neg):
        return neg(mul(left, right.operand))
    # constants to the front so products of constants meet and fold
    if isinstance(right, Const) and not isinstance(left, Const):
        return mul(right, left)
    if isinstance(left, Const) and isinstance(right, BinOp) and right.op == "*":
        if isinstance(right.left, Const):
            return mul(Const(left.value * right.left.value), right.right)
    return BinOp("*", left, right)


def div(left: Expr, right: Expr) -> Expr:
    if _is_const(right, 1.0):
        return left
    if _is_const(left, 0.0) and not _is_const(right, 0.0):
        return ZERO
    if isinstance(left, Const) and isinstance(right, Const) and right.value != 0.0:
        return Const(left.value / right.value)
    return BinOp("/", left, right)


def neg(operand: Expr) -> Expr:
    if isinstance(operand, Const):
        return Const(-operand.value)
    if isinstance(operand, Neg):
        return operand.operand
    return Neg(operand)


def power(base: Expr, exponent: int) -> Expr:
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    if isinstance(base, Const) and not (base.value == 0.0 and exponent < 0):
        return Const(base.value**exponent)
    return Pow(base, exponent)


def call(func: str, arg: Expr) -> Expr:
    if func not in FUNCTIONS:
        raise UnknownIdentifierError(func, expected=frozenset(FUNCTIONS))
    if isinstance(arg, Const):
        return Const(FUNCTIONS[func](arg.value))
    return Call(func, arg)


# =========================================================================
# PRINTING
# =========================================================================


def _format_const(value: float) -> str:
    text = repr(float(value))
    if value < 0 or text.startswith("-"):
        return f"({text})"
    return text


def _wrap(e: Expr, min_precedence: int) -> str:
    text = to_text(e)
    if e.precedence < min_precedence:
        return f"({text})"
    return text


def to_text(e: Expr) -> str:
    """
    Print an expression in the parser's grammar.

    Args:
        e: Expression to print

    Returns:
        Text that parses back to a tree with identical values
    """
    if isinstance(e, Const):
        return _format_const(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Pi):
        return "pi"
    if isinstance(e, Neg):
        return f"-{_wrap(e.operand, _PREC_NEG)}"
    if isinstance(e, Call):
        return f"{e.func}({to_text(e.arg)})"
    if isinstance(e, Pow):
        exponent = str(e.exponent) if e.exponent >= 0 else f"({e.exponent})"
        return f"{_wrap(e.base, _PREC_ATOM)}^{exponent}"
    if isinstance(e, BinOp):
        prec = e.precedence
        return f"{_wrap(e.left, prec)} {e.op} {_wrap(e.right, prec + 1)}"
    raise TypeError(f"not an expression node: {type(e).__name__}")
