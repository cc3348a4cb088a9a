#!/usr/bin/env python3
"""
Rerun the reference convergence tables and the counterexample spectra.

Usage:
    python scripts/reproduce_tables.py [--threads N]
"""

import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from analysis import convergence_table, remark_counterexample  # noqa: E402
from schemas.examples import (  # noqa: E402
    REFERENCE_COEFFICIENTS,
    REFERENCE_ERRORS,
    reference_problem,
)

logger = logging.getLogger(__name__)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")

    worst = 0.0
    for example, reference in REFERENCE_ERRORS.items():
        report = convergence_table(
            reference_problem(example), sorted(reference), t_eval=1.0, threads=args.threads
        )
        print(f"\nExample {example}")
        if example in REFERENCE_COEFFICIENTS:
            EI, rho, c = REFERENCE_COEFFICIENTS[example]
            print(f"(EI, rho, c) = ({EI:g}, {rho:g}, {c:g})")
        print(f"{'Nx':>5} {'error':>14} {'reference':>14} {'rel. diff':>10} {'order':>7}")
        for row in report.rows:
            ref = reference[row.nx]
            diff = abs(row.error - ref) / ref
            worst = max(worst, diff)
            order = "" if row.order is None else f"{row.order:.4f}"
            print(f"{row.nx:>5} {row.error:>14.6e} {ref:>14.6e} {diff:>10.2e} {order:>7}")
        print(f"average order {report.average_order:.4f}")

    counter = remark_counterexample()
    print("\nEigenvalues of Bcal:")
    for s in counter.b_spectrum.eigenvalues:
        print(f"  {s.real:+.4f} {s.imag:+.4f}i")
    print("Eigenvalues of Acal^-1 Bcal:")
    for s in counter.c_spectrum.eigenvalues:
        print(f"  {s.real:+.4f} {s.imag:+.4f}i")
    print(f"\nlargest relative deviation from the reference tables: {worst:.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
