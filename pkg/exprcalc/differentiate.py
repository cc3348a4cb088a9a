"""
Symbolic differentiation and substitution.

Rules are registered per node type with ``functools.singledispatch``; results
are rebuilt through the folding constructors so repeated derivatives of the
beam solutions stay compact.
"""

from functools import singledispatch

from exprcalc.nodes import (
    ONE,
    ZERO,
    BinOp,
    Call,
    Const,
    Expr,
    Neg,
    Pi,
    Pow,
    Var,
    Variable,
    add,
    call,
    div,
    mul,
    neg,
    power,
    sub,
)


@singledispatch
def _d(e: Expr, v: Variable) -> Expr:
    raise TypeError(f"Cannot differentiate a {type(e).__name__}")


@_d.register
def _(e: Const, v: Variable) -> Expr:
    return ZERO


@_d.register
def _(e: Pi, v: Variable) -> Expr:
    return ZERO


@_d.register
def _(e: Var, v: Variable) -> Expr:
    return ONE if e.name == v else ZERO


@_d.register
def _(e: Neg, v: Variable) -> Expr:
    return neg(_d(e.operand, v))


@_d.register
def _(e: BinOp, v: Variable) -> Expr:
    a, b = e.left, e.right
    da, db = _d(a, v), _d(b, v)
    if e.op == "+":
        return add(da, db)
    if e.op == "-":
        return sub(da, db)
    if e.op == "*":
        return add(mul(da, b), mul(a, db))
    # quotient rule
    return div(sub(mul(da, b), mul(a, db)), power(b, 2))


@_d.register
def _(e: Pow, v: Variable) -> Expr:
    return mul(mul(Const(float(e.exponent)), power(e.base, e.exponent - 1)), _d(e.base, v))


@_d.register
def _(e: Call, v: Variable) -> Expr:
    inner = _d(e.arg, v)
    if e.func == "sin":
        outer = call("cos", e.arg)
    elif e.func == "cos":
        outer = neg(call("sin", e.arg))
    elif e.func == "sinh":
        outer = call("cosh", e.arg)
    elif e.func == "cosh":
        outer = call("sinh", e.arg)
    else:
        outer = e
    return mul(outer, inner)


def diff(e: Expr, v: Variable, order: int = 1) -> Expr:
    """
    Differentiate an expression symbolically.

    Args:
        e: Expression tree
        v: Variable, ``"x"`` or ``"t"``
        order: Number of successive derivatives to take

    Returns:
        Exact derivative as a new expression tree
    """
    if v not in ("x", "t"):
        raise ValueError(f"can only differentiate with respect to x or t, got {v!r}")
    result = e
    for _ in range(order):
        result = _d(result, v)
    return result


@singledispatch
def _subst(e: Expr, v: Variable, value: Expr) -> Expr:
    raise TypeError(f"Cannot substitute into a {type(e).__name__}")


@_subst.register(Const)
@_subst.register(Pi)
def _(e: Expr, v: Variable, value: Expr) -> Expr:
    return e


@_subst.register
def _(e: Var, v: Variable, value: Expr) -> Expr:
    return value if e.name == v else e


@_subst.register
def _(e: Neg, v: Variable, value: Expr) -> Expr:
    return neg(_subst(e.operand, v, value))


@_subst.register
def _(e: BinOp, v: Variable, value: Expr) -> Expr:
    left = _subst(e.left, v, value)
    right = _subst(e.right, v, value)
    builders = {"+": add, "-": sub, "*": mul, "/": div}
    return builders[e.op](left, right)


@_subst.register
def _(e: Pow, v: Variable, value: Expr) -> Expr:
    return power(_subst(e.base, v, value), e.exponent)


@_subst.register
def _(e: Call, v: Variable, value: Expr) -> Expr:
    return call(e.func, _subst(e.arg, v, value))


def substitute(e: Expr, v: Variable, value: float) -> Expr:
    """Replace every occurrence of ``v`` by the constant ``value``."""
    return _subst(e, v, Const(float(value)))
