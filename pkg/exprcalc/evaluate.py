"""
Numeric evaluation of expression trees.

Evaluation works on Python floats and on numpy arrays alike, so one tree can
be sampled over a whole spatial grid in a single call.
"""

from functools import singledispatch
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from exprcalc.errors import EvaluationDomainError
from exprcalc.nodes import BinOp, Call, Const, Expr, Neg, Pi, Pow, Var

_UFUNCS = {
    "sin": np.sin,
    "cos": np.cos,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "exp": np.exp,
}


@singledispatch
def _eval(e: Expr, x: Any, t: Any) -> Any:
    raise TypeError(f"Cannot evaluate a {type(e).__name__}")


@_eval.register
def _(e: Const, x: Any, t: Any) -> Any:
    return e.value


@_eval.register
def _(e: Pi, x: Any, t: Any) -> Any:
    return np.pi


@_eval.register
def _(e: Var, x: Any, t: Any) -> Any:
    return x if e.name == "x" else t


@_eval.register
def _(e: Neg, x: Any, t: Any) -> Any:
    return -_eval(e.operand, x, t)


@_eval.register
def _(e: Call, x: Any, t: Any) -> Any:
    return _UFUNCS[e.func](_eval(e.arg, x, t))


@_eval.register
def _(e: Pow, x: Any, t: Any) -> Any:
    base = _eval(e.base, x, t)
    if e.exponent < 0:
        if np.any(base == 0):
            raise EvaluationDomainError(f"zero raised to negative power in {e}")
        return 1.0 / base ** (-e.exponent)
    return base**e.exponent


@_eval.register
def _(e: BinOp, x: Any, t: Any) -> Any:
    left = _eval(e.left, x, t)
    right = _eval(e.right, x, t)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if np.any(right == 0):
        raise EvaluationDomainError(f"division by zero in {e}")
    return left / right


def evaluate(e: Expr, x: float, t: float) -> float:
    """
    Evaluate an expression at one point.

    Args:
        e: Expression tree
        x: Spatial coordinate
        t: Time

    Returns:
        IEEE double value

    Raises:
        EvaluationDomainError: On division by zero
    """
    return float(_eval(e, float(x), float(t)))


def sample(e: Expr, xs: ArrayLike, t: float) -> NDArray[np.float64]:
    """
    Evaluate an expression over an array of x values at a fixed time.

    Constant (x-independent) expressions are broadcast to the shape of ``xs``.
    """
    grid = np.asarray(xs, dtype=np.float64)
    values = _eval(e, grid, float(t))
    return np.broadcast_to(np.asarray(values, dtype=np.float64), grid.shape).copy()
