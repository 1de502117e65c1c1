"""Variational hydrogen ratio for the Gaussian trial function.

The ratio <H>_min / E_0 at angular momentum l is taken as given:

    (l+1)^2 / (l+3/2) * [Gamma(l+1) / Gamma(l+3/2)]^2

With n = l + 1 it becomes Gamma(n+1)^2 / (Gamma(n+1/2) Gamma(n+3/2)), which
is (2/pi) times the n-th Wallis partial product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core_numerics import log_gamma_ratio
from .errors import DomainError

MAX_L = 10**7
RECURRENCE_TOL = 1e-12


@dataclass(frozen=True)
class VariationalRow:
    l: int  # noqa: E741 - quantum number name
    n: int
    ratio: float
    deviation: float


def _check_int(value, name, lo):
    if int(value) != value or value < lo:
        raise DomainError(f"{name} must be an integer >= {lo}, got {value!r}")
    return int(value)


def variational_ratio(l: int) -> float:  # noqa: E741
    """<H>_min / E_0 for angular momentum l, evaluated in the log domain."""
    l = _check_int(l, "l", 0)  # noqa: E741
    if l > MAX_L:
        raise DomainError(f"l <= {MAX_L} only")
    log_r = 2.0 * math.log(l + 1.0) - math.log(l + 1.5) + 2.0 * log_gamma_ratio(l + 1.0, l + 1.5)
    return math.exp(log_r)


def recurrence_residual(n: float) -> float:
    """|ln Gamma(n+3/2) - ln(n+1/2) - ln Gamma(n+1/2)|."""
    return abs(log_gamma_ratio(n + 1.5, n + 0.5) - math.log(n + 0.5))


def variational_ratio_reduced(n: int) -> float:
    """Gamma(n+1)^2 / (Gamma(n+1/2) Gamma(n+3/2)) for n >= 1.

    Also checks (n+1/2) Gamma(n+1/2) = Gamma(n+3/2) on the way and raises
    ``ArithmeticError`` if the log-gamma backend breaks it.
    """
    n = _check_int(n, "n", 1)
    if recurrence_residual(n) > RECURRENCE_TOL:
        raise ArithmeticError(f"Gamma recurrence fails at n={n}")
    return math.exp(log_gamma_ratio(n + 1.0, n + 0.5) + log_gamma_ratio(n + 1.0, n + 1.5))


def wallis_from_hydrogen(n: int) -> float:
    """(pi/2) * variational_ratio_reduced(n), i.e. the n-th Wallis partial product."""
    return 0.5 * math.pi * variational_ratio_reduced(n)


def variational_ladder(l_max: int, stride: int = 1) -> list[VariationalRow]:
    l_max = _check_int(l_max, "l_max", 0)
    stride = _check_int(stride, "stride", 1)
    rows = []
    for l in range(0, l_max + 1, stride):  # noqa: E741
        r = variational_ratio(l)
        rows.append(VariationalRow(l, l + 1, r, r - 1.0))
    return rows
