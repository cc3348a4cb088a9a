"""Manufactured forcing for the damped beam equation."""

from exprcalc.differentiate import diff
from exprcalc.nodes import Const, Expr, add, mul


def manufacture_forcing(u: Expr, EI: float, rho: float, c: float) -> Expr:
    """
    Build f = EI*u_xxxx + rho*u_tt + c*u_t symbolically.

    Args:
        u: Exact displacement u(x, t)
        EI: Flexural rigidity
        rho: Linear density
        c: Damping coefficient

    Returns:
        Forcing expression that makes ``u`` an exact solution
    """
    bending = mul(Const(float(EI)), diff(u, "x", order=4))
    inertia = mul(Const(float(rho)), diff(u, "t", order=2))
    damping = mul(Const(float(c)), diff(u, "t"))
    return add(add(bending, inertia), damping)


def beam_residual(u: Expr, f: Expr, EI: float, rho: float, c: float) -> Expr:
    """Continuous residual EI*u_xxxx + rho*u_tt + c*u_t - f as an expression."""
    return manufacture_forcing(u, EI, rho, c) - f
