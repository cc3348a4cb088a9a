"""Tests for the expression parser, evaluator and symbolic calculus."""

import math

import numpy as np
import pytest

from exprcalc import (
    EvaluationDomainError,
    ExprSyntaxError,
    UnknownIdentifierError,
    beam_residual,
    diff,
    evaluate,
    manufacture_forcing,
    parse,
    sample,
    substitute,
    to_text,
)
from exprcalc.nodes import ZERO, Const, Pow, Var, call
from schemas.examples import EXAMPLES

SMOOTH = [
    "sin(pi*x)*cos(pi*t)",
    "sinh(t)*cos(pi*x)",
    "exp(-t)*sin(pi*x)",
    "x^3 - 2*x*t + 1/(1 + x^2)",
    "cosh(x*t) - (x - t)^2 / 3",
]


class TestParse:
    def test_example_solution(self):
        e = parse("sin(pi*x)*cos(pi*t)")
        assert evaluate(e, 0.5, 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_zero(self):
        assert parse("0") == ZERO

    def test_precedence_and_associativity(self):
        assert evaluate(parse("x^2 + 2*x*t"), 1.0, 2.0) == 5.0
        assert evaluate(parse("8 - 4 - 2"), 0.0, 0.0) == 2.0
        assert evaluate(parse("8 / 4 / 2"), 0.0, 0.0) == 1.0
        assert evaluate(parse("-x^2"), 3.0, 0.0) == -9.0

    def test_negative_exponent(self):
        assert parse("x^-2") == Pow(Var("x"), -2)
        assert parse("x^(-2)") == Pow(Var("x"), -2)

    def test_constant_folding(self):
        assert parse("2*3 + 1") == Const(7.0)

    @pytest.mark.parametrize(
        "src, offset",
        [
            ("sin(", 4),
            ("x +* 2", 3),
            ("2 $ x", 2),
            ("x^1.5", 2),
            ("(x + t", 6),
            ("x t", 2),
        ],
    )
    def test_syntax_error_offsets(self, src, offset):
        with pytest.raises(ExprSyntaxError) as info:
            parse(src)
        assert info.value.offset == offset
        assert info.value.expected

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError) as info:
            parse("2*foo(x)")
        assert info.value.name == "foo"
        assert info.value.offset == 2

    def test_unknown_function_in_built_node(self):
        with pytest.raises(UnknownIdentifierError) as info:
            call("tan", Var("x"))
        assert info.value.name == "tan"
        assert info.value.offset is None
        assert "sin" in info.value.expected

    def test_offsets_are_bytes(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("é")
        assert info.value.offset == 0
        with pytest.raises(ExprSyntaxError) as info:
            parse("x + 1 $")
        assert info.value.offset == 6


class TestPrint:
    @pytest.mark.parametrize("src", SMOOTH + ["-(x - 2)", "x - (t - 1)", "(-3)*x", "2^(-1)*x"])
    def test_printed_text_parses_to_same_values(self, src, rng):
        e = parse(src)
        again = parse(to_text(e))
        for x, t in rng.uniform(0.1, 1.0, size=(10, 2)):
            assert evaluate(again, x, t) == pytest.approx(evaluate(e, x, t), rel=1e-14)


class TestEvaluate:
    @pytest.mark.parametrize(
        "src, x, t, expected",
        [
            ("sin(pi*x)*cos(pi*t)", 0.5, 0.0, 1.0),
            ("sinh(t)*cos(pi*x)", 0.0, 1.0, 1.1752011936438014),
            ("exp(-t)*sin(pi*x)", 0.5, 1.0, 0.36787944117144233),
        ],
    )
    def test_point_values(self, src, x, t, expected):
        assert evaluate(parse(src), x, t) == pytest.approx(expected, rel=1e-14)

    def test_division_by_zero(self):
        with pytest.raises(EvaluationDomainError):
            evaluate(parse("1/x"), 0.0, 1.0)
        with pytest.raises(EvaluationDomainError):
            evaluate(parse("x^-1"), 0.0, 1.0)

    def test_sample_broadcasts_constants(self):
        xs = np.linspace(0.0, 1.0, 7)
        np.testing.assert_array_equal(sample(parse("3"), xs, 0.2), np.full(7, 3.0))
        np.testing.assert_allclose(sample(parse("x*t"), xs, 2.0), 2.0 * xs)


class TestDiff:
    def test_sine(self):
        d = diff(parse("sin(pi*x)"), "x")
        assert evaluate(d, 0.0, 0.0) == pytest.approx(math.pi)

    def test_fourth_derivative(self):
        d4 = diff(parse("sin(pi*x)"), "x", order=4)
        assert evaluate(d4, 0.5, 0.0) == pytest.approx(math.pi**4, rel=1e-14)

    def test_constant(self):
        assert diff(parse("42"), "t") == ZERO
        assert diff(parse("x^2"), "t") == ZERO

    def test_rejects_other_variables(self):
        with pytest.raises(ValueError):
            diff(parse("x"), "y")  # type: ignore[arg-type]

    @pytest.mark.parametrize("src", SMOOTH)
    def test_matches_central_differences(self, src):
        e = parse(src)
        de = diff(e, "x")
        x, t = 0.37, 0.61
        exact = evaluate(de, x, t)
        errors = []
        for h in (1e-2, 5e-3):
            approx = (evaluate(e, x + h, t) - evaluate(e, x - h, t)) / (2 * h)
            errors.append(abs(approx - exact))
        # second-order: halving h cuts the error by ~4
        assert errors[1] < errors[0]
        assert math.log2(errors[0] / errors[1]) == pytest.approx(2.0, abs=0.1)

    def test_substitute(self):
        e = substitute(parse("x*t + t^2"), "t", 2.0)
        assert evaluate(e, 3.0, 100.0) == pytest.approx(10.0)


class TestForcing:
    def test_example1_closed_form(self, rng):
        EI, rho, c = 98.0, 0.685, 0.75
        f = manufacture_forcing(parse("sin(pi*x)*cos(pi*t)"), EI, rho, c)
        pi = math.pi
        for x, t in rng.uniform(0.0, 1.0, size=(20, 2)):
            expected = (EI * pi**4 - rho * pi**2) * math.sin(pi * x) * math.cos(pi * t) - (
                c * pi * math.sin(pi * x) * math.sin(pi * t)
            )
            assert evaluate(f, x, t) == pytest.approx(expected, rel=1e-12, abs=1e-9)

    def test_example3_closed_form(self, rng):
        f = manufacture_forcing(parse("exp(-t)*sin(pi*x)"), 98.0, 0.68, 7.5)
        for x, t in rng.uniform(0.0, 1.0, size=(20, 2)):
            expected = (98.0 * math.pi**4 + 0.68 - 7.5) * math.exp(-t) * math.sin(math.pi * x)
            assert evaluate(f, x, t) == pytest.approx(expected, rel=1e-12, abs=1e-9)

    def test_zero_solution(self):
        assert manufacture_forcing(parse("0"), 1.0, 1.0, 1.0) == ZERO

    @pytest.mark.parametrize("example", sorted(EXAMPLES))
    def test_builtin_residual_vanishes(self, example, rng):
        entry = EXAMPLES[example]
        u = parse(entry.u_exact)
        f = manufacture_forcing(u, entry.EI, entry.rho, entry.c)
        residual = beam_residual(u, f, entry.EI, entry.rho, entry.c)
        points = rng.uniform(0.0, 1.0, size=(100, 2))
        assert max(abs(evaluate(residual, x, t)) for x, t in points) <= 1e-9
