"""
CSV artifacts with a JSON configuration sidecar.

Floats are written in scientific notation with 17 significant digits so a
re-run with the same configuration reproduces the file byte for byte.
"""

import csv
import json
import logging
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any, TextIO

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".16e"


def format_value(value: Any) -> str:
    """Render one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    if hasattr(value, "dtype") and getattr(value.dtype, "kind", "") == "f":
        return format(float(value), FLOAT_FORMAT)
    return str(value)


def _write(handle: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> int:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    count = 0
    for row in rows:
        writer.writerow([format_value(v) for v in row])
        count += 1
    return count


def sidecar_path(output: Path) -> Path:
    return output.with_name(output.name + ".json")


def write_table(
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    output: Path | None = None,
    snapshot: dict[str, Any] | None = None,
) -> None:
    """
    Write a header plus rows as CSV.

    Args:
        header: Column names
        rows: Row values; floats use ``FLOAT_FORMAT``
        output: Destination file, or stdout when None
        snapshot: Configuration echoed to ``<output>.json`` (files only)

    Raises:
        OSError: If the destination cannot be written
    """
    if output is None:
        _write(sys.stdout, header, rows)
        sys.stdout.flush()
        return

    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8", newline="") as handle:
        count = _write(handle, header, rows)
    logger.info(f"Wrote {count} rows to {output}")

    if snapshot is not None:
        with open(sidecar_path(output), "w", encoding="utf-8") as handle:
            json.dump(snapshot, handle, indent=2, sort_keys=True)
            handle.write("\n")
