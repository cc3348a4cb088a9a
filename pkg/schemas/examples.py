"""
Built-in manufactured-solution benchmarks.

Each example fixes an exact solution on [0, 1] x [0, 1] together with the
beam coefficients; the remaining data are derived from the solution.
"""

from dataclasses import dataclass

from schemas.models import BeamProblem


@dataclass(frozen=True)
class BuiltinExample:
    """Exact solution plus coefficients of a reference problem."""

    u_exact: str
    EI: float
    rho: float
    c: float

    def problem(self, length: float = 1.0, final_time: float = 1.0) -> BeamProblem:
        return BeamProblem.from_exact(
            self.u_exact, self.EI, self.rho, self.c, length=length, final_time=final_time
        )


EXAMPLES: dict[int, BuiltinExample] = {
    1: BuiltinExample("sin(pi*x)*cos(pi*t)", EI=98.0, rho=0.685, c=0.75),
    2: BuiltinExample("sinh(t)*cos(pi*x)", EI=1.0, rho=1.0, c=1.0),
    3: BuiltinExample("exp(-t)*sin(pi*x)", EI=98.0, rho=0.68, c=7.5),
}

# Reference L-infinity errors at t = 1 with dt = h^2, keyed by Nx. They were
# produced with Psi^0 sampled from the exact u_xx and, for example 1, with
# unit coefficients (see REFERENCE_COEFFICIENTS).
REFERENCE_ERRORS: dict[int, dict[int, float]] = {
    1: {
        32: 6.634501648061786e-7,
        64: 4.1534138461862824e-8,
        128: 2.597110193569563e-9,
        256: 1.6252299506192003e-10,
        512: 1.0099698855015049e-11,
    },
    2: {
        32: 1.182547729e-7,
        64: 7.388819223e-9,
        128: 4.620274163e-10,
        256: 2.901023866e-11,
        512: 1.859623566e-12,
    },
    3: {
        32: 2.849383778924519e-7,
        64: 1.7771973226388127e-8,
        128: 1.110404379556229e-9,
        256: 6.894679271951532e-11,
        512: 1.2934653348395386e-12,
    },
}


def builtin_problem(example: int) -> BeamProblem:
    """
    Problem for a built-in example id.

    Raises:
        KeyError: If ``example`` is not 1, 2 or 3
    """
    try:
        entry = EXAMPLES[example]
    except KeyError:
        raise KeyError(f"unknown example {example}; choose one of {sorted(EXAMPLES)}") from None
    return entry.problem()


# (EI, rho, c) behind REFERENCE_ERRORS where they differ from EXAMPLES.
REFERENCE_COEFFICIENTS: dict[int, tuple[float, float, float]] = {
    1: (1.0, 1.0, 1.0),
}


def reference_problem(example: int) -> BeamProblem:
    """
    Problem whose errors on the dt = h^2 ladder reproduce ``REFERENCE_ERRORS``.

    Same exact solution as ``builtin_problem``; only the coefficients may differ.
    """
    entry = EXAMPLES[example]
    if example in REFERENCE_COEFFICIENTS:
        EI, rho, c = REFERENCE_COEFFICIENTS[example]
        entry = BuiltinExample(entry.u_exact, EI=EI, rho=rho, c=c)
    return entry.problem()
