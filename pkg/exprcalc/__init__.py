"""
Closed-form expressions in (x, t).

This package parses, prints, evaluates and symbolically differentiates the
expressions that carry exact solutions, initial/boundary data and forcing.

Modules:
- nodes: Immutable expression tree and printer
- parser: Recursive-descent parser with positioned diagnostics
- evaluate: Scalar and vectorised evaluation
- differentiate: Symbolic derivatives and substitution
- forcing: Manufactured forcing for the beam equation
"""

from exprcalc.differentiate import diff, substitute
from exprcalc.errors import EvaluationDomainError, ExprSyntaxError, UnknownIdentifierError
from exprcalc.evaluate import evaluate, sample
from exprcalc.forcing import beam_residual, manufacture_forcing
from exprcalc.nodes import Expr, to_text
from exprcalc.parser import parse

__all__ = [
    "Expr",
    "parse",
    "to_text",
    "evaluate",
    "sample",
    "diff",
    "substitute",
    "manufacture_forcing",
    "beam_residual",
    # Errors
    "ExprSyntaxError",
    "UnknownIdentifierError",
    "EvaluationDomainError",
]
