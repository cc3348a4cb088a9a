"""
Command-line front end.

    beam-compact solve --example 1 --nx 100 --dt 0.005 --t 1
    beam-compact converge --example 1 --ladder 32,64,128,256 --dt h2 --t 1
    beam-compact stability --example 1 --nx 16 --dt 0.01
    beam-compact consistency --example 1 --ladder 16,32,64,128 --nt-ladder 10,20,40

Exit status: 0 success, 1 configuration error, 2 acceptance check failed,
3 I/O error, 4 numerical error.
"""

import argparse
import logging
import sys
import tomllib
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from analysis import (
    consistency_order,
    convergence_table,
    stability_check,
    temporal_convergence_table,
)
from exprcalc import ExprSyntaxError, sample
from publish import write_table
from schemas.config import RunConfig, get_settings
from schemas.models import Grid
from stepper import solve

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_ACCEPTANCE = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4

_CUSTOM_FLAGS = ("u_exact", "xi1", "xi2", "mu0", "mu1", "mu2", "mu3", "f")
_COEFFICIENT_FLAGS = ("EI", "rho", "c", "length", "final_time")


class ConfigError(Exception):
    """Invalid command line or configuration file."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args: Any, **kwargs: Any):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _dt(text: str) -> str | float:
    if text == "h2":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'h2' or a number, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per experiment."""
    common = _Parser(add_help=False)
    common.add_argument("--config", type=Path, help="TOML configuration file")
    common.add_argument("--example", type=int, help="Built-in example id (1-3)")
    for name in _CUSTOM_FLAGS:
        common.add_argument(f"--{name.replace('_', '-')}", dest=name, help=f"Expression for {name}")
    for name in _COEFFICIENT_FLAGS:
        flag = name if name == "EI" else name.replace("_", "-")
        common.add_argument(f"--{flag}", dest=name, type=float, help=f"Coefficient {name}")
    common.add_argument("--output", "-o", type=Path, help="CSV path (default: stdout)")
    common.add_argument("--threads", type=int, help="Worker threads for ladder runs")
    common.add_argument("--log-level", help="Logging level (default from BEAM_LOG_LEVEL)")

    parser = _Parser(prog="beam-compact", description="Compact-difference CN beam solver")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="Solve and print u at the final time")
    p.add_argument("--nx", type=int)
    p.add_argument("--dt", type=_dt)
    p.add_argument("--t", dest="t_eval", type=float)
    p.add_argument("--stride", type=int, help="Also output every N steps")

    p = sub.add_parser("converge", parents=[common], help="Convergence table")
    p.add_argument("--ladder", type=_int_list)
    p.add_argument("--nt-ladder", dest="nt_ladder", type=_int_list)
    p.add_argument("--nx", type=int, help="Fixed nx for --nt-ladder")
    p.add_argument("--dt", type=_dt)
    p.add_argument("--t", dest="t_eval", type=float)

    p = sub.add_parser("stability", parents=[common], help="Spectral stability check")
    p.add_argument("--nx", type=int)
    p.add_argument("--dt", type=_dt)

    p = sub.add_parser("consistency", parents=[common], help="Truncation-residual orders")
    p.add_argument("--ladder", type=_int_list)
    p.add_argument("--nt-ladder", dest="nt_ladder", type=_int_list)
    p.add_argument("--nx", type=int, help="Fixed nx for --nt-ladder")
    p.add_argument("--dt", type=_dt)
    return parser


def load_config(path: Path | None = None, overrides: dict[str, Any] | None = None) -> RunConfig:
    """
    Build a validated run configuration from a TOML file and/or flag values.

    Flag values override file values; a flag-level problem choice replaces
    the file's, while custom-expression flags merge into a file's custom block.

    Raises:
        pydantic.ValidationError: On schema violations, with field paths
        tomllib.TOMLDecodeError: On malformed TOML
        OSError: If the file cannot be read
    """
    data: dict[str, Any] = {}
    if path is not None:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    overrides = dict(overrides or {})

    problem_override = overrides.pop("problem", None)
    if problem_override is not None:
        if "custom" in problem_override and "custom" in data.get("problem", {}):
            merged = {**data["problem"]["custom"], **problem_override["custom"]}
            problem_override = {"custom": merged}
        data["problem"] = problem_override
    data.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig.model_validate(data)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Translate parsed flags into a RunConfig."""
    overrides: dict[str, Any] = {"command": args.command}
    for name in ("ladder", "nt_ladder", "dt", "t_eval", "nx", "stride", "output", "threads"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value

    custom = {
        name: getattr(args, name)
        for name in _CUSTOM_FLAGS + _COEFFICIENT_FLAGS
        if getattr(args, name) is not None
    }
    if args.example is not None and custom:
        raise ConfigError("--example cannot be combined with custom problem flags")
    if args.example is not None:
        overrides["problem"] = {"example": args.example}
    elif custom:
        overrides["problem"] = {"custom": custom}
    return load_config(args.config, overrides)


def _run_solve(config: RunConfig) -> int:
    problem = config.problem.to_problem()
    assert config.nx is not None
    grid = Grid.from_problem(problem, config.nx, config.dt, final_time=config.t_eval)
    trajectory = solve(problem, grid, stride=config.stride)

    rows: list[list[Any]] = []
    for n, u in zip(trajectory.time_indices, trajectory.displacements, strict=True):
        t = grid.time(n)
        if problem.u_exact is not None:
            exact = sample(problem.u_exact, grid.nodes, t)
            error = abs(u - exact)
        for i, x in enumerate(grid.nodes):
            row: list[Any] = [float(x), float(u[i])]
            if problem.u_exact is not None:
                row += [float(exact[i]), float(error[i])]
            else:
                row += [None, None]
            rows.append([t, *row] if config.stride else row)

    header = ["x", "u_numeric", "u_exact", "error"]
    write_table(["t", *header] if config.stride else header, rows, config.output, _snapshot(config))
    return EXIT_OK


def _run_converge(config: RunConfig) -> int:
    problem = config.problem.to_problem()
    if config.ladder:
        report = convergence_table(
            problem, config.ladder, t_eval=config.t_eval, dt=config.dt, threads=config.threads
        )
        header = ["mesh", "Nx", "h", "error", "order"]
        rows: list[list[Any]] = [[r.mesh, r.nx, r.h, r.error, r.order] for r in report.rows]
    else:
        assert config.nx is not None
        report = temporal_convergence_table(
            problem, config.nx, config.nt_ladder, t_eval=config.t_eval, threads=config.threads
        )
        header = ["mesh", "Nt", "dt", "error", "order"]
        rows = [[r.mesh, r.nt, r.dt, r.error, r.order] for r in report.rows]
    rows.append(["average", None, None, None, report.average_order])
    write_table(header, rows, config.output, _snapshot(config))

    if not report.monotone:
        logger.error("Convergence errors are not monotonically decreasing")
        return EXIT_ACCEPTANCE
    return EXIT_OK


def _run_stability(config: RunConfig) -> int:
    problem = config.problem.to_problem()
    assert config.nx is not None
    h = problem.length / config.nx
    dt = h * h if config.dt == "h2" else float(config.dt)
    # one step of exactly dt; the amplification matrix does not depend on T
    grid = Grid(nx=config.nx, nt=1, length=problem.length, final_time=dt)
    report = stability_check(problem, grid)
    header = ["nx", "dt", "max_re", "spectral_radius", "direct_radius", "converged", "pass"]
    rows = [
        [
            grid.nx,
            grid.dt,
            report.max_real,
            report.spectral_radius,
            report.direct_radius,
            report.converged,
            report.passed,
        ]
    ]
    write_table(header, rows, config.output, _snapshot(config))
    return EXIT_OK if report.passed else EXIT_ACCEPTANCE


def _run_consistency(config: RunConfig) -> int:
    problem = config.problem.to_problem()
    kwargs: dict[str, Any] = {"dt": config.dt, "nt_ladder": config.nt_ladder}
    if config.nx is not None:
        kwargs["nx_time"] = config.nx
    report = consistency_order(problem, config.ladder, **kwargs)
    header = ["kind", "Nx", "h", "dt", "residual", "fitted_order", "at_floor"]
    rows = [
        [
            r.kind,
            r.nx,
            r.h,
            r.dt,
            r.residual,
            report.spatial_order if r.kind == "space" else report.temporal_order,
            r.at_floor,
        ]
        for r in report.rows
    ]
    write_table(header, rows, config.output, _snapshot(config))
    if not report.passed:
        logger.error(
            f"Consistency orders out of range: space={report.spatial_order}, "
            f"time={report.temporal_order}"
        )
        return EXIT_ACCEPTANCE
    return EXIT_OK


_COMMANDS = {
    "solve": _run_solve,
    "converge": _run_converge,
    "stability": _run_stability,
    "consistency": _run_consistency,
}


def _snapshot(config: RunConfig) -> dict[str, Any]:
    return config.model_dump(mode="json")


def run(config: RunConfig) -> int:
    """
    Execute a validated configuration.

    Returns:
        Exit status (0 ok, 1 invalid input, 2 acceptance failure, 3 I/O error,
        4 numerical error)
    """
    logger.info(f"Running {config.command}")
    try:
        return _COMMANDS[config.command](config)
    except ValidationError as e:
        logger.error(f"Invalid problem: {e}")
        return EXIT_CONFIG
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_CONFIG
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO
    except ArithmeticError as e:
        logger.error(f"Numerical error: {e}")
        return EXIT_NUMERICAL


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the ``beam-compact`` script."""
    settings = get_settings()
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        print(f"beam-compact: error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = config_from_args(args)
    except (ConfigError, ValidationError, ExprSyntaxError, tomllib.TOMLDecodeError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    except OSError as e:
        logger.error(f"Cannot read configuration: {e}")
        return EXIT_IO
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
