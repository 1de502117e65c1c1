"""Lerch transcendent Phi(z, s, u) = sum_k z^k / (u + k)^s on the real axis.

Covered regions: |z| < 1 by direct summation, z = -1 through CVZ acceleration,
z = 1 through the Hurwitz zeta function (Euler-Maclaurin, which also supplies
the continuation to s <= 1).  The s-derivative at s = -m comes from the Euler
transformed double series, valid for z < 1/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .core_numerics import (
    CVZ_MAX_TERMS,
    CVZ_RATE,
    HALF_LOG_2PI,
    SeriesResult,
    TruncationPolicy,
    alt_series_sum,
    bernoulli_numbers,
    binomial_float,
    log_gamma,
    log_gamma_ratio,
)
from .errors import ContinuationRequired, DomainError, HypothesisError, PoleError, UnsupportedError

EM_CORRECTIONS = 10
MAX_COROLLARY_M = 4
COROLLARY_MIN_TERMS = 8
COROLLARY_ROW_CAP = 1000
CVZ_NON_MONOTONE_TERMS = 40


class Region(str, enum.Enum):
    INSIDE = "inside"
    BOUNDARY_NEG = "boundary_neg"
    BOUNDARY_POS = "boundary_pos"


class ZSign(str, enum.Enum):
    POS_ONE = "pos_one"
    NEG_ONE = "neg_one"


def _check_u(u):
    if not u > 0.0:
        raise DomainError(f"u must be > 0, got {u!r}")


@dataclass(frozen=True)
class LerchArgs:
    z: float
    s: float
    u: float

    def __post_init__(self):
        _check_u(self.u)
        if abs(self.z) > 1.0:
            raise DomainError(f"|z| > 1 is outside the series region (z={self.z!r})")

    @property
    def region(self) -> Region:
        if self.z == 1.0:
            return Region.BOUNDARY_POS
        if self.z == -1.0:
            return Region.BOUNDARY_NEG
        return Region.INSIDE

    @property
    def needs_continuation(self) -> bool:
        return self.region is Region.BOUNDARY_POS and self.s <= 1.0


@dataclass(frozen=True)
class CorollaryArgs:
    z: float
    m: int
    u: float

    def __post_init__(self):
        _check_u(self.u)
        if not self.z < 0.5:
            raise HypothesisError(f"the double series needs z < 1/2, got z={self.z!r}")
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"m must be a nonnegative integer, got {self.m!r}")
        if self.m > MAX_COROLLARY_M:
            raise UnsupportedError(f"m <= {MAX_COROLLARY_M} only, got {self.m}")


# --------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin
# --------------------------------------------------------------------------


def _em_split(s: float, u: float) -> int:
    return max(math.ceil(u), 16) + math.ceil(abs(s))


def _hurwitz_em(s: float, u: float) -> tuple[float, int, float]:
    m = _em_split(s, u)
    n = u + m
    head = math.fsum((u + k) ** -s for k in range(m))
    parts = [head, n ** (1.0 - s) / (s - 1.0), 0.5 * n**-s]
    # r_j = s (s+1) ... (s+2j-2) n^(-s-2j+1) / (2j)!
    r = s * n ** (-s - 1.0) / 2.0
    bern = bernoulli_numbers(EM_CORRECTIONS + 1)
    for j in range(1, EM_CORRECTIONS + 1):
        parts.append(bern[j - 1] * r)
        r *= (s + 2 * j - 1) * (s + 2 * j) / ((2 * j + 1) * (2 * j + 2) * n * n)
    next_term = abs(bern[EM_CORRECTIONS] * r)
    return math.fsum(parts), m, next_term


def hurwitz_zeta(s: float, u: float) -> float:
    """Hurwitz zeta(s, u) for real s != 1 and u > 0.

    Direct sum of the first M terms, then the integral, the half term and ten
    Bernoulli corrections at N = u + M.  Accuracy is about 1e-12 relative to
    the largest direct term; for negative s and large u that term is large,
    so the absolute error grows with it.
    """
    _check_u(u)
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    return _hurwitz_em(float(s), float(u))[0]


def hurwitz_zeta_ds0(u: float) -> float:
    """d/ds zeta(s, u) at s = 0, differentiating the Euler-Maclaurin pieces."""
    _check_u(u)
    u = float(u)
    m = _em_split(0.0, u)
    n = u + m
    bern = bernoulli_numbers(EM_CORRECTIONS)
    parts = [-math.log(u + k) for k in range(m)]
    parts += [n * math.log(n), -n, -0.5 * math.log(n)]
    parts += [b / ((2 * j) * (2 * j - 1) * n ** (2 * j - 1)) for j, b in enumerate(bern, start=1)]
    return math.fsum(parts)


# --------------------------------------------------------------------------
# Phi itself
# --------------------------------------------------------------------------


def _cvz_terms_for(tail_tol: float, a0: float, max_terms: int) -> int:
    if a0 == 0.0:
        return 2
    n = math.ceil(math.log(2.0 * abs(a0) / tail_tol) / math.log(CVZ_RATE))
    return max(2, min(n, CVZ_MAX_TERMS, max_terms))


def phi(args: LerchArgs, policy: Optional[TruncationPolicy] = None) -> SeriesResult:
    """Phi(z, s, u) in the regions where its defining series can be used.

    ``|z| < 1`` is summed directly with a rigorous geometric tail bound.
    ``z = -1`` goes through CVZ acceleration; the bound is only claimed when
    s >= 0 (totally monotone terms), and s < 0 gives the Abel-regularised
    value.  ``z = 1`` with s > 1 delegates to :func:`hurwitz_zeta`, reporting
    the first omitted Euler-Maclaurin correction as the tail bound.
    """
    policy = policy or TruncationPolicy()
    z, s, u = float(args.z), float(args.s), float(args.u)
    region = args.region
    if region is Region.INSIDE:
        value, used, tail = kernels.lerch_direct(z, s, u, int(policy.max_terms), float(policy.tail_tol))
        return SeriesResult.from_bound(value, used, float(tail), policy)
    if region is Region.BOUNDARY_NEG:
        monotone = s >= 0.0
        a0 = u**-s
        if monotone:
            n = _cvz_terms_for(policy.tail_tol, a0, policy.max_terms)
        else:
            n = max(2, min(CVZ_NON_MONOTONE_TERMS, policy.max_terms))
        return alt_series_sum(lambda k: (u + k) ** -s, n, monotone, policy.tail_tol)
    if args.needs_continuation:
        raise ContinuationRequired("z = 1 with s <= 1: use hurwitz_zeta (continuation)")
    value, m, next_term = _hurwitz_em(s, u)
    return SeriesResult.from_bound(value, m + EM_CORRECTIONS, next_term, policy)


def dphi_dz(z: float, s: float, u: float, policy: Optional[TruncationPolicy] = None) -> SeriesResult:
    """Term-wise derivative sum_k k z^(k-1) / (u + k)^s for |z| < 1."""
    policy = policy or TruncationPolicy()
    _check_u(u)
    if not abs(z) < 1.0:
        raise DomainError("dphi_dz needs |z| < 1")
    az = abs(z)
    terms = []
    tail = math.inf
    for k in range(1, policy.max_terms + 1):
        terms.append(k * z ** (k - 1) * (u + k) ** -s)
        # sup over j > k of |t_{j+1} / t_j|
        rho = az * (k + 2.0) / (k + 1.0) * max(1.0, ((u + k + 2.0) / (u + k + 1.0)) ** -s)
        if rho < 1.0:
            nxt = (k + 1) * az**k * (u + k + 1.0) ** -s
            tail = nxt / (1.0 - rho)
            if tail <= policy.tail_tol:
                break
    return SeriesResult.from_bound(math.fsum(terms), len(terms), tail, policy)


def raising_residual(z: float, s: float, u: float, policy: Optional[TruncationPolicy] = None) -> float:
    """|Phi(z, s-1, u) - (u Phi(z, s, u) + z dPhi/dz(z, s, u))| for |z| < 1."""
    policy = policy or TruncationPolicy()
    if not abs(z) < 1.0:
        raise DomainError("raising_residual uses the analytic z-derivative, which needs |z| < 1")
    lower = phi(LerchArgs(z, s - 1.0, u), policy).value
    here = phi(LerchArgs(z, s, u), policy).value
    slope = dphi_dz(z, s, u, policy).value
    return abs(lower - (u * here + z * slope))


# --------------------------------------------------------------------------
# s-derivative at s = -m through the Euler-transformed double series
# --------------------------------------------------------------------------


def alternating_log_differences(u: float, n_max: int) -> np.ndarray:
    """c_n = sum_{k=0}^{n} (-1)^(k+1) C(n, k) ln(u + k) for n = 0..n_max.

    Binomials are exact integers up to n = 62 and log-gamma based above.
    """
    _check_u(u)
    size = n_max + 1
    binom = np.zeros((size, size))
    for n in range(size):
        for k in range(n + 1):
            binom[n, k] = binomial_float(n, k)
    logs = np.log(u + np.arange(size, dtype=np.float64))
    return kernels.alt_binomial_rows(binom, logs)


def _operator_coefficients(m: int, n: int, u: float) -> dict[tuple[int, int], float]:
    # (u + z d/dz)^m on z^(n+i) (1-z)^-(n+1+e); keys (i, e)
    coeffs = {(0, 0): 1.0}
    for _ in range(m):
        nxt: dict[tuple[int, int], float] = {}
        for (i, e), c in coeffs.items():
            nxt[(i, e)] = nxt.get((i, e), 0.0) + c * (u + n + i)
            nxt[(i + 1, e + 1)] = nxt.get((i + 1, e + 1), 0.0) + c * (n + 1 + e)
        coeffs = nxt
    return coeffs


def _outer_weight(z: float, m: int, n: int, u: float) -> float:
    q = 1.0 / (1.0 - z)
    base = q * (-z * q) ** n
    if m == 0:
        return base
    total = math.fsum(c * z**i * q**e for (i, e), c in _operator_coefficients(m, n, u).items())
    return base * total


def dphi_ds_corollary(args: CorollaryArgs, policy: Optional[TruncationPolicy] = None) -> SeriesResult:
    """dPhi/ds at (z, -m, u) from the Euler-transformed double series.

    The outer sum runs over n with weight (1/(1-z)) w^n, w = -z/(1-z); for
    m >= 1 the operator (u + z d/dz) is applied exactly to each weight.
    Summation stops once an outer term drops below ``tail_tol`` with at least
    eight terms taken (early terms can vanish, e.g. ln 1 at u = 1).
    """
    policy = policy or TruncationPolicy()
    z, m, u = float(args.z), int(args.m), float(args.u)
    w = abs(z / (1.0 - z))
    cap = min(policy.max_terms, COROLLARY_ROW_CAP)
    c = alternating_log_differences(u, min(cap, 64) - 1)
    terms: list[float] = []
    tail = math.inf
    for n in range(cap):
        if n >= c.shape[0]:
            c = alternating_log_differences(u, min(cap, 2 * c.shape[0]) - 1)
        t = float(c[n]) * _outer_weight(z, m, n, u)
        terms.append(t)
        if n + 1 >= COROLLARY_MIN_TERMS and abs(t) < policy.tail_tol:
            tail = _corollary_tail(float(c[n]), z, m, n, u, w)
            break
    return SeriesResult.from_bound(math.fsum(terms), len(terms), tail, policy)


def _corollary_tail(c_n, z, m, n, u, w):
    # |c_j| is nonincreasing for j >= 1, so the m = 0 tail is geometric in w
    if w >= 1.0:
        return math.inf
    q = abs(1.0 / (1.0 - z))
    if m == 0:
        return abs(c_n) * q * w ** (n + 1) / (1.0 - w)
    # estimate: operator weights grow like a degree-m polynomial in n
    ratio = w * ((n + 2.0 + u) / (n + 1.0 + u)) ** m
    if ratio >= 1.0:
        return math.inf
    return abs(c_n * _outer_weight(z, m, n + 1, u)) / (1.0 - ratio)


def dphi_ds_closed(z_sign: ZSign | str, u: float) -> float:
    """Closed forms of dPhi/ds at s = 0 on the unit circle.

    ``POS_ONE``: ln(Gamma(u) / sqrt(2 pi)).
    ``NEG_ONE``: ln(Gamma(u/2) / (Gamma((u+1)/2) sqrt 2)).
    """
    _check_u(u)
    z_sign = ZSign(z_sign)
    if z_sign is ZSign.POS_ONE:
        return log_gamma(u) - HALF_LOG_2PI
    return log_gamma_ratio(0.5 * u, 0.5 * (u + 1.0)) - 0.5 * math.log(2.0)


def b1_poly(x: float) -> float:
    """First Bernoulli polynomial, x - 1/2."""
    return x - 0.5


__all__ = [
    "CorollaryArgs",
    "LerchArgs",
    "Region",
    "ZSign",
    "alternating_log_differences",
    "b1_poly",
    "dphi_ds_closed",
    "dphi_ds_corollary",
    "dphi_dz",
    "hurwitz_zeta",
    "hurwitz_zeta_ds0",
    "phi",
    "raising_residual",
]
