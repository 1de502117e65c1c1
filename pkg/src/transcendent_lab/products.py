"""Partial products converging to pi/2 and 2/pi, and the Gamma identities behind them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .core_numerics import EXACT_BINOMIAL_MAX_N, log_gamma, log_gamma_ratio
from .errors import DomainError, UnsupportedError
from .lerch import alternating_log_differences

HALF_PI = 0.5 * math.pi
LINEAR_PRODUCT_MAX_N = 10**6


@dataclass(frozen=True)
class LadderRow:
    index: int
    partial: float
    deviation: float
    target: float


class GammaRatioVariant(str, enum.Enum):
    HALF = "half"  # Gamma(n+1) / Gamma(n+1/2)
    THREE_HALF = "three_half"  # Gamma(n+1) / Gamma(n+3/2)


def _check_count(n, name="n"):
    if int(n) != n or n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def _wallis_increments(n: int) -> np.ndarray:
    j = np.arange(1, n + 1, dtype=np.float64)
    return 1.0 / (4.0 * j * j - 1.0)


def wallis_partial(n: int) -> float:
    """prod_{j=1}^{n} (2j)^2 / ((2j-1)(2j+1)).

    Each factor is written 1 + 1/(4j^2 - 1) and accumulated with
    compensation, so the only rounding left is in the tiny increments.
    """
    n = _check_count(n)
    return float(kernels.prod_one_plus(_wallis_increments(n)))


def wallis_partials(n_max: int) -> np.ndarray:
    """All Wallis partial products for n = 1..n_max (index 0 holds n = 1)."""
    n_max = _check_count(n_max, "n_max")
    return kernels.cumprod_one_plus(_wallis_increments(n_max))


def wallis_ladder(indices: Iterable[int], target: float = HALF_PI) -> list[LadderRow]:
    indices = [_check_count(i, "index") for i in indices]
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise DomainError("ladder indices must be strictly increasing")
    if not indices:
        return []
    partials = wallis_partials(indices[-1])
    return [LadderRow(i, float(partials[i - 1]), float(partials[i - 1]) - target, target) for i in indices]


def euler_sine_partial(x: float, n: int) -> float:
    """prod_{k=1}^{n} (1 - x^2 / (k^2 pi^2)).

    x = 0 returns the limit value 1 of sin(x)/x instead of raising.
    """
    n = _check_count(n)
    if x == 0.0:
        return 1.0
    k = np.arange(1, n + 1, dtype=np.float64)
    r = x / math.pi
    return float(kernels.prod_one_plus(-(r / k) ** 2))


def euler_sine_ladder(x: float, indices: Iterable[int]) -> list[LadderRow]:
    """Sine-product partials at ``indices`` against sin(x)/x."""
    indices = [_check_count(i, "index") for i in indices]
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise DomainError("ladder indices must be strictly increasing")
    if not indices:
        return []
    target = 1.0 if x == 0.0 else math.sin(x) / x
    if x == 0.0:
        partials = np.ones(indices[-1])
    else:
        k = np.arange(1, indices[-1] + 1, dtype=np.float64)
        partials = kernels.cumprod_one_plus(-((x / math.pi) / k) ** 2)
    return [LadderRow(i, float(partials[i - 1]), float(partials[i - 1]) - target, target) for i in indices]


def doubling_indices(n: int) -> list[int]:
    """1, 2, 4, ... below n, then n itself."""
    n = _check_count(n)
    out = []
    i = 1
    while i < n:
        out.append(i)
        i *= 2
    out.append(n)
    return out


def _ratio_increments(variant: GammaRatioVariant, n: int) -> np.ndarray:
    j = np.arange(1, n + 1, dtype=np.float64)
    if variant is GammaRatioVariant.HALF:
        return 1.0 / (2.0 * j - 1.0)  # 2j/(2j-1) = 1 + 1/(2j-1)
    return -1.0 / (2.0 * j + 1.0)  # 2j/(2j+1) = 1 - 1/(2j+1)


def gamma_ratio(variant: GammaRatioVariant | str, n: int) -> tuple[float, float]:
    """Gamma(n+1)/Gamma(n+1/2) or Gamma(n+1)/Gamma(n+3/2), computed twice.

    Returns ``(lgamma_route, product_route)``: the first from log-gamma
    differences, the second from the finite products
    ``(1/sqrt pi) prod 2j/(2j-1)`` and ``(2/sqrt pi) prod 2j/(2j+1)``.
    Above n = 1e6 the product is accumulated in the log domain.
    """
    variant = GammaRatioVariant(variant)
    n = _check_count(n)
    if variant is GammaRatioVariant.HALF:
        shift, prefactor = 0.5, 1.0 / math.sqrt(math.pi)
    else:
        shift, prefactor = 1.5, 2.0 / math.sqrt(math.pi)
    lgamma_route = math.exp(log_gamma_ratio(n + 1.0, n + shift))
    inc = _ratio_increments(variant, n)
    if n <= LINEAR_PRODUCT_MAX_N:
        product = float(kernels.prod_one_plus(inc))
    else:
        product = math.exp(math.fsum(np.log1p(inc)))
    return lgamma_route, prefactor * product


def legendre_duplication_residual(n: float) -> float:
    """|ln Gamma(2n) - [(2n-1) ln 2 + ln Gamma(n) + ln Gamma(n+1/2) - ln(pi)/2]|.

    For n >= 8 the Stirling parts of the four log-gammas are combined in
    closed form (they collapse to 1/2 - n log1p(1/(2n))), leaving the Binet
    remainders to be checked numerically.  Subtracting the raw log-gammas
    would hit the 1e-11 ulp floor of numbers near 1e5.
    """
    if not n > 0.0:
        raise DomainError(f"n must be > 0, got {n!r}")
    n = float(n)
    if n < 8.0:
        lhs = log_gamma(2.0 * n)
        rhs = math.fsum(
            [(2.0 * n - 1.0) * math.log(2.0), log_gamma(n), log_gamma(n + 0.5), -0.5 * math.log(math.pi)]
        )
        return abs(lhs - rhs)
    b = kernels.binet_scalar
    return abs(
        math.fsum([0.5, -n * math.log1p(0.5 / n), float(b(2.0 * n)), -float(b(n)), -float(b(n + 0.5))])
    )


# --------------------------------------------------------------------------
# exp(s) = pi/2 with s = 2 dPhi/ds(-1, 0, 1)
# --------------------------------------------------------------------------


def _check_depth(depth):
    depth = _check_count(depth, "depth")
    if depth > EXACT_BINOMIAL_MAX_N:
        raise UnsupportedError(f"depth <= {EXACT_BINOMIAL_MAX_N} (exact binomials) only")
    return depth


def sondow_exponents(depth: int) -> np.ndarray:
    """2^-n sum_{k=0}^{n} (-1)^(k+1) C(n,k) ln(k+1) for n = 0..depth."""
    depth = _check_depth(depth)
    inner = alternating_log_differences(1.0, depth)
    return np.ldexp(inner, -np.arange(depth + 1))


def sondow_factor(n: int) -> float:
    """The n-th factor of the exponential product, n >= 1 (f_1 = sqrt 2)."""
    n = _check_depth(n)
    return math.exp(float(sondow_exponents(n)[n]))


def sondow_pi_product(depth: int) -> float:
    """prod_{n=1}^{depth} f_n, with f_n = exp(exponent_n); tends to pi/2."""
    exps = sondow_exponents(depth)
    return float(kernels.prod_one_plus(np.expm1(exps[1:])))


def s_constant(depth: int) -> float:
    """Sum of the exponents for n = 0..depth; tends to ln(pi/2)."""
    return math.fsum(sondow_exponents(depth))


def sondow_ladder(depth: int, target: float = HALF_PI) -> list[LadderRow]:
    exps = sondow_exponents(depth)
    partials = kernels.cumprod_one_plus(np.expm1(exps[1:]))
    return [LadderRow(i + 1, float(p), float(p) - target, target) for i, p in enumerate(partials)]
