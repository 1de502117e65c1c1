"""Hot loops, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom of the module are bound to one flavour or the
other according to :data:`transcendent_lab._jit.USE_NUMBA`.  Both flavours stay
importable under their suffixed names so the benchmark (and the tests) can run
them side by side.

Numba flavours accumulate with Neumaier compensation; numpy flavours go through
the log domain and ``math.fsum``.  The two agree to a few ulps, not bit for bit.
"""

import math

import numpy as np

from ._jit import USE_NUMBA, njit

LANCZOS_G = 7.0
LANCZOS_COEFFS = np.array(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ]
)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


# --------------------------------------------------------------------------
# Lanczos log-gamma, split as Stirling main part + Binet remainder
# --------------------------------------------------------------------------


@njit
def _binet_nb(x):
    shift = 0.0
    if x < 0.5:
        shift = (x + 0.5) * math.log1p(1.0 / x) - 1.0
        x = x + 1.0
    a = LANCZOS_COEFFS[0]
    for k in range(1, 9):
        a += LANCZOS_COEFFS[k] / (x + (k - 1))
    gh = LANCZOS_G - 0.5
    return shift + (x - 0.5) * math.log1p(gh / x) - gh + math.log(a)


@njit
def _log_gamma_array_nb(x):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        xi = x[i]
        out[i] = (xi - 0.5) * math.log(xi) - xi + HALF_LOG_2PI + _binet_nb(xi)
    return out


def _binet_np(x):
    x = np.asarray(x, dtype=np.float64)
    small = x < 0.5
    shift = np.zeros_like(x)
    with np.errstate(divide="ignore"):
        shift[small] = (x[small] + 0.5) * np.log1p(1.0 / x[small]) - 1.0
    xs = np.where(small, x + 1.0, x)
    a = np.full_like(xs, LANCZOS_COEFFS[0])
    for k in range(1, 9):
        a += LANCZOS_COEFFS[k] / (xs + (k - 1))
    gh = LANCZOS_G - 0.5
    return shift + (xs - 0.5) * np.log1p(gh / xs) - gh + np.log(a)


def _log_gamma_array_np(x):
    x = np.asarray(x, dtype=np.float64)
    return (x - 0.5) * np.log(x) - x + HALF_LOG_2PI + _binet_np(x)


# --------------------------------------------------------------------------
# Products of (1 + d_j), final value and running partials
# --------------------------------------------------------------------------


@njit
def _cumprod_one_plus_nb(d):
    n = d.shape[0]
    out = np.empty(n)
    hi = 1.0
    lo = 0.0
    for j in range(n):
        # (hi + lo)(1 + d) = hi + hi d + lo (1 + d); lo scales with the product
        inc = hi * d[j]
        s = hi + inc
        if abs(hi) >= abs(inc):
            err = (hi - s) + inc
        else:
            err = (inc - s) + hi
        lo = lo * (1.0 + d[j]) + err
        hi = s
        out[j] = hi + lo
    return out


@njit
def _prod_one_plus_nb(d):
    hi = 1.0
    lo = 0.0
    for j in range(d.shape[0]):
        inc = hi * d[j]
        s = hi + inc
        if abs(hi) >= abs(inc):
            err = (hi - s) + inc
        else:
            err = (inc - s) + hi
        lo = lo * (1.0 + d[j]) + err
        hi = s
    return hi + lo


def _log_abs_one_plus(d):
    d = np.asarray(d, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.where(d > -1.0, np.log1p(np.maximum(d, -1.0)), np.log(np.abs(1.0 + d)))
    negative = (1.0 + d) < 0.0
    return logs, negative


def _prod_one_plus_np(d):
    logs, negative = _log_abs_one_plus(d)
    if np.isneginf(logs).any():
        return 0.0
    sign = -1.0 if np.count_nonzero(negative) % 2 else 1.0
    return sign * math.exp(math.fsum(logs))


def _cumprod_one_plus_np(d):
    logs, negative = _log_abs_one_plus(d)
    sign = np.where(np.cumsum(negative) % 2 == 1, -1.0, 1.0)
    with np.errstate(over="ignore"):
        return sign * np.exp(np.cumsum(logs))


# --------------------------------------------------------------------------
# Direct Lerch summation with a running tail bound
# --------------------------------------------------------------------------


@njit
def _tail_bound(az, s, u, k):
    # bound on sum_{j > k} |z|^j (u+j)^-s
    nxt = az ** (k + 1)
    if s >= 0.0:
        return nxt / ((1.0 - az) * (u + k + 1.0) ** s)
    rho = az * ((u + k + 2.0) / (u + k + 1.0)) ** (-s)
    if rho >= 1.0:
        return math.inf
    return nxt * (u + k + 1.0) ** (-s) / (1.0 - rho)


@njit
def _lerch_direct_nb(z, s, u, max_terms, tail_tol):
    az = abs(z)
    total = 0.0
    comp = 0.0
    zk = 1.0
    tail = math.inf
    for k in range(max_terms):
        term = zk * (u + k) ** (-s)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        tail = _tail_bound(az, s, u, k)
        if tail <= tail_tol:
            return total + comp, k + 1, tail
        zk *= z
    return total + comp, max_terms, tail


def _lerch_direct_np(z, s, u, max_terms, tail_tol):
    k = np.arange(max_terms, dtype=np.float64)
    az = abs(z)
    with np.errstate(over="ignore", under="ignore"):
        terms = np.power(z, k) * np.power(u + k, -s)
        nxt = np.power(az, k + 1.0)
        if s >= 0.0:
            tails = nxt / ((1.0 - az) * np.power(u + k + 1.0, s))
        else:
            rho = az * np.power((u + k + 2.0) / (u + k + 1.0), -s)
            tails = np.where(
                rho < 1.0, nxt * np.power(u + k + 1.0, -s) / np.abs(1.0 - rho), np.inf
            )
    hits = np.nonzero(tails <= tail_tol)[0]
    n = int(hits[0]) + 1 if hits.size else max_terms
    return math.fsum(terms[:n]), n, float(tails[n - 1])


# --------------------------------------------------------------------------
# Alternating binomial sums  sum_k (-1)^(k+1) C(n,k) f_k,  rows n = 0..N
# --------------------------------------------------------------------------


@njit
def _alt_binomial_rows_nb(binom, f):
    nrows = binom.shape[0]
    out = np.empty(nrows)
    for n in range(nrows):
        total = 0.0
        comp = 0.0
        for k in range(n + 1):
            term = binom[n, k] * f[k]
            if k % 2 == 0:
                term = -term
            t = total + term
            if abs(total) >= abs(term):
                comp += (total - t) + term
            else:
                comp += (term - t) + total
            total = t
        out[n] = total + comp
    return out


def _alt_binomial_rows_np(binom, f):
    nrows = binom.shape[0]
    signs = np.where(np.arange(binom.shape[1]) % 2 == 0, -1.0, 1.0)
    products = binom * (signs * f)[None, :]
    return np.array([math.fsum(products[n, : n + 1]) for n in range(nrows)])


if USE_NUMBA:
    binet_scalar = _binet_nb
    log_gamma_array = _log_gamma_array_nb
    prod_one_plus = _prod_one_plus_nb
    cumprod_one_plus = _cumprod_one_plus_nb
    lerch_direct = _lerch_direct_nb
    alt_binomial_rows = _alt_binomial_rows_nb
else:
    binet_scalar = _binet_nb.py_func if hasattr(_binet_nb, "py_func") else _binet_nb
    log_gamma_array = _log_gamma_array_np
    prod_one_plus = _prod_one_plus_np
    cumprod_one_plus = _cumprod_one_plus_np
    lerch_direct = _lerch_direct_np
    alt_binomial_rows = _alt_binomial_rows_np

BACKEND = "numba" if USE_NUMBA else "numpy"
