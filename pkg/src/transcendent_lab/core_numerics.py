"""Scalar special functions and sequence acceleration.

Everything downstream (Lerch evaluation, the products, the variational chain)
is built from the handful of primitives here.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import kernels
from .errors import ArityError, DomainError, UnsupportedError

HALF_LOG_2PI = kernels.HALF_LOG_2PI
EXACT_BINOMIAL_MAX_N = 62
MAX_BERNOULLI = 40
MAX_RICHARDSON_LEVELS = 8
CVZ_RATE = 3.0 + math.sqrt(8.0)
CVZ_MAX_TERMS = 60  # error 5.83^-60 is far below double precision

MAX_TERMS_ENV = "TRANSCENDENT_LAB_MAX_TERMS"
DEFAULT_MAX_TERMS = 10_000
DEFAULT_TAIL_TOL = 1e-13


def _default_max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_TERMS
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"{MAX_TERMS_ENV}={raw!r} is not an integer") from exc


@dataclass(frozen=True)
class TruncationPolicy:
    """Caps shared by every series evaluation.

    Evaluation stops at whichever bound triggers first: ``max_terms`` terms
    consumed, or a tail bound at or below ``tail_tol``.  The default
    ``max_terms`` can be changed through ``TRANSCENDENT_LAB_MAX_TERMS``.
    """

    max_terms: int = field(default_factory=_default_max_terms)
    tail_tol: float = DEFAULT_TAIL_TOL

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not self.tail_tol > 0.0:
            raise DomainError(f"tail_tol must be > 0, got {self.tail_tol!r}")


@dataclass(frozen=True)
class SeriesResult:
    """A truncated or accelerated sum with its convergence evidence.

    ``tail_bound`` is ``None`` when no bound is available.
    """

    value: float
    terms_used: int
    tail_bound: Optional[float]
    converged: bool

    @classmethod
    def from_bound(cls, value, terms_used, tail_bound, policy: TruncationPolicy):
        ok = tail_bound is not None and tail_bound <= policy.tail_tol
        return cls(float(value), int(terms_used), tail_bound, ok)


class AccelMethod(str, enum.Enum):
    RAW = "raw"
    RICHARDSON = "richardson"
    AITKEN = "aitken"
    ALT_CVZ = "alt_cvz"


# --------------------------------------------------------------------------
# Gamma function
# --------------------------------------------------------------------------


def _check_positive(x, name="x"):
    if not x > 0.0:
        raise DomainError(f"{name} must be > 0, got {x!r}")


def stirling_main(x: float) -> float:
    """Leading Stirling terms ``(x - 1/2) ln x - x + ln(2 pi)/2``."""
    return (x - 0.5) * math.log(x) - x + HALF_LOG_2PI


def binet(x: float) -> float:
    """Binet remainder ``ln Gamma(x) - stirling_main(x)``, from the Lanczos sum.

    Kept separate so that differences of log-gammas at large, nearby
    arguments can cancel the Stirling part exactly instead of subtracting
    two numbers near 1e5.
    """
    _check_positive(x)
    return float(kernels.binet_scalar(float(x)))


def log_gamma(x: float) -> float:
    """ln Gamma(x) for real x > 0 (Lanczos, g = 7, nine coefficients).

    Arguments below 1/2 are lifted once with Gamma(x) = Gamma(x + 1) / x.

    >>> log_gamma(6.0)  # ln 120
    4.787491742782046
    """
    _check_positive(x)
    x = float(x)
    return stirling_main(x) + float(kernels.binet_scalar(x))


def log_gamma_array(x):
    """Vectorised :func:`log_gamma` over a 1-D float array."""
    import numpy as np

    arr = np.ascontiguousarray(x, dtype=np.float64).ravel()
    if arr.size and not (arr > 0.0).all():
        raise DomainError("log_gamma_array needs every element > 0")
    return kernels.log_gamma_array(arr)


def log_gamma_ratio(a: float, b: float) -> float:
    """ln(Gamma(a) / Gamma(b)) without cancelling two large log-gammas.

    The Stirling parts are combined analytically,
    ``(a - 1/2) log1p((a - b)/b) + (a - b)(ln b - 1)``, and only the small
    Binet remainders are subtracted numerically.
    """
    _check_positive(a, "a")
    _check_positive(b, "b")
    a = float(a)
    b = float(b)
    main = (a - 0.5) * math.log1p((a - b) / b) + (a - b) * (math.log(b) - 1.0)
    return main + float(kernels.binet_scalar(a)) - float(kernels.binet_scalar(b))


# --------------------------------------------------------------------------
# Binomials and Bernoulli numbers
# --------------------------------------------------------------------------


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k); exact integer arithmetic for n <= 62, log-gamma above."""
    if int(n) != n or int(k) != k:
        raise DomainError("log_binomial needs integer arguments")
    n = int(n)
    k = int(k)
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n <= EXACT_BINOMIAL_MAX_N:
        return math.log(math.comb(n, k))
    k = min(k, n - k)
    if k == 0:
        return 0.0
    return log_gamma_ratio(n + 1.0, k + 1.0) - log_gamma(n - k + 1.0)


def binomial_float(n: int, k: int) -> float:
    if n <= EXACT_BINOMIAL_MAX_N:
        return float(math.comb(n, k))
    return math.exp(log_binomial(n, k))


def _bernoulli_fractions(count: int) -> list[Fraction]:
    # B_0..B_{2 count} from sum_{j=0}^{n} C(n+1, j) B_j = 0
    top = 2 * count
    b = [Fraction(1)]
    for n in range(1, top + 1):
        acc = sum((math.comb(n + 1, j) * b[j] for j in range(n)), Fraction(0))
        b.append(-acc / (n + 1))
    return b


_BERNOULLI_EXACT = _bernoulli_fractions(MAX_BERNOULLI)
_BERNOULLI_EVEN = tuple(float(_BERNOULLI_EXACT[2 * k]) for k in range(1, MAX_BERNOULLI + 1))


def bernoulli_fraction(n: int) -> Fraction:
    """Exact B_n for 0 <= n <= 80 (convention B_1 = -1/2)."""
    if not 0 <= n <= 2 * MAX_BERNOULLI:
        raise UnsupportedError(f"B_{n} is outside the precomputed range")
    return _BERNOULLI_EXACT[n]


def bernoulli_numbers(count: int) -> list[float]:
    """B_2, B_4, ..., B_{2 count} as floats."""
    if count > MAX_BERNOULLI:
        raise UnsupportedError(f"at most {MAX_BERNOULLI} Bernoulli numbers are supported")
    if count < 0:
        raise DomainError("count must be >= 0")
    return list(_BERNOULLI_EVEN[:count])


# --------------------------------------------------------------------------
# Sequence acceleration
# --------------------------------------------------------------------------


def _richardson(partials: Sequence[float], levels: int) -> float:
    # partials sampled at N, 2N, 4N, ...; error model c1/N + c2/N^2 + ...
    row = list(partials[-(levels + 1):])
    for j in range(1, levels + 1):
        f = 2.0**j
        row = [(f * row[i + 1] - row[i]) / (f - 1.0) for i in range(len(row) - 1)]
    return row[-1]


def _aitken(partials: Sequence[float]) -> float:
    x0, x1, x2 = partials[-3], partials[-2], partials[-1]
    d1 = x2 - x1
    denom = d1 - (x1 - x0)
    if denom == 0.0:
        return x2
    return x2 - d1 * d1 / denom


def _cvz_weights(n: int) -> tuple[list[float], float]:
    d = CVZ_RATE**n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    weights = []
    for k in range(n):
        c = b - c
        weights.append(c)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return weights, d


def _cvz(terms: Sequence[float]) -> float:
    terms = terms[:CVZ_MAX_TERMS]
    weights, d = _cvz_weights(len(terms))
    return math.fsum(w * a for w, a in zip(weights, terms)) / d


def accelerate(partials: Sequence[float], method: AccelMethod | str = AccelMethod.RAW, levels: int = 1) -> float:
    """Estimate the limit of a sequence of partial values.

    ``RICHARDSON`` expects partials at N, 2N, 4N, ... and removes ``levels``
    orders of an expansion in 1/N, using the last ``levels + 1`` entries.
    ``AITKEN`` is one Delta-squared step on the last three entries.
    ``ALT_CVZ`` treats the partials as running sums of an alternating series
    and re-sums their first (at most 60) increments with
    Cohen-Villegas-Zagier weights.
    """
    method = AccelMethod(method)
    partials = [float(p) for p in partials]
    if len(partials) < 3:
        raise ArityError(f"need at least 3 partial values, got {len(partials)}")
    if method is AccelMethod.RAW:
        return partials[-1]
    if method is AccelMethod.AITKEN:
        return _aitken(partials)
    if method is AccelMethod.RICHARDSON:
        if not 1 <= levels <= MAX_RICHARDSON_LEVELS:
            raise UnsupportedError(f"Richardson levels must be in 1..{MAX_RICHARDSON_LEVELS}")
        if len(partials) < levels + 1:
            raise ArityError(f"Richardson({levels}) needs {levels + 1} partials, got {len(partials)}")
        return _richardson(partials, levels)
    terms = [partials[0]] + [b - a for a, b in zip(partials, partials[1:])]
    return _cvz([t if k % 2 == 0 else -t for k, t in enumerate(terms)])


def cvz_error_bound(a0: float, n_terms: int) -> float:
    """Error bound 2 |a_0| / (3 + sqrt 8)^n for totally monotone a_k."""
    return 2.0 * abs(a0) / CVZ_RATE**n_terms


def alt_series_sum(
    term_magnitudes: Callable[[int], float],
    n_terms: int,
    totally_monotone: bool = True,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> SeriesResult:
    """Sum of (-1)^k a_k over k >= 0 by CVZ acceleration from n_terms values.

    With ``totally_monotone`` the reported tail bound is the CVZ error bound;
    otherwise no bound is claimed.  Sequences such as a_k = 1 are summed in
    the Abel sense.  At most 60 leading terms are used.
    """
    if n_terms < 2:
        raise ArityError(f"alt_series_sum needs n_terms >= 2, got {n_terms}")
    n_terms = min(n_terms, CVZ_MAX_TERMS)
    a = [float(term_magnitudes(k)) for k in range(n_terms)]
    value = _cvz(a)
    bound = cvz_error_bound(a[0], n_terms) if totally_monotone else None
    return SeriesResult(value, n_terms, bound, bound is not None and bound <= tail_tol)


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    if not h > 0.0:
        raise DomainError("step h must be > 0")
    return (f(x + h) - f(x - h)) / (2.0 * h)
