"""Command-line interface for beam-compact."""

from cli.main import build_parser, config_from_args, load_config, main, run

__all__ = ["build_parser", "config_from_args", "load_config", "main", "run"]
