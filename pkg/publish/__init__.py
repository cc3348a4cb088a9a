"""Deterministic CSV output for solver and study results."""

from publish.csv_writer import FLOAT_FORMAT, format_value, sidecar_path, write_table

__all__ = ["FLOAT_FORMAT", "format_value", "sidecar_path", "write_table"]
