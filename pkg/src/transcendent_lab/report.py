"""Identity suite and CSV/JSON emitters."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Mapping, Optional, Sequence

import numpy as np

from .core_numerics import HALF_LOG_2PI, AccelMethod, TruncationPolicy, accelerate, log_gamma
from .errors import LabError
from .hydrogen import variational_ratio_reduced
from .lerch import (
    CorollaryArgs,
    ZSign,
    b1_poly,
    dphi_ds_closed,
    dphi_ds_corollary,
    hurwitz_zeta,
    hurwitz_zeta_ds0,
    raising_residual,
)
from .products import (
    HALF_PI,
    GammaRatioVariant,
    euler_sine_partial,
    gamma_ratio,
    legendre_duplication_residual,
    s_constant,
    wallis_partial,
    wallis_partials,
)

DUPLICATION_SEED = 20240601
COROLLARY_MAX_OUTER = 64
RAISING_GRID = [
    (z, s, u) for z in (-0.5, -0.2, 0.0, 0.2, 0.5) for s in (1.0, 2.0, 3.0) for u in (0.5, 1.0, 2.0)
]


class UsageError(LabError, ValueError):
    """Bad request to the suite, detected before anything is computed."""


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    lhs: float
    rhs: float
    abs_err: float
    tol: float
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass(frozen=True)
class SuiteReport:
    checks: list[IdentityCheck]
    all_pass: bool
    config: dict[str, Any]
    timestamp: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "all_pass": self.all_pass,
            "config": self.config,
            "timestamp": self.timestamp,
        }


# --------------------------------------------------------------------------
# Registered checks; each returns (lhs, rhs)
# --------------------------------------------------------------------------


def _max_rel(pairs):
    return max(abs(a - b) / abs(b) for a, b in pairs)


def _wallis_limit(policy):
    return wallis_partial(10**6), HALF_PI


def _sine_at_half_pi(policy):
    return euler_sine_partial(HALF_PI, 10**5), 2.0 / math.pi


def _duplication(policy):
    rng = np.random.default_rng(DUPLICATION_SEED)
    pts = rng.uniform(0.0, 1e4, 1000)
    pts = pts[pts > 0.0]
    return max(legendre_duplication_residual(float(x)) for x in pts), 0.0


def _ratio_routes(policy):
    worst = 0.0
    for variant in GammaRatioVariant:
        worst = max(worst, _max_rel(gamma_ratio(variant, n) for n in range(1, 1001)))
    return worst, 0.0


def _hydrogen_bridge(policy):
    partials = wallis_partials(10**4)
    pairs = ((HALF_PI * variational_ratio_reduced(n), float(partials[n - 1])) for n in range(1, 10**4 + 1))
    return _max_rel(pairs), 0.0


def _b1_bridge(policy):
    xs = (0.25, 0.5, 1.0, 2.0, 7.5)
    return max(abs(-hurwitz_zeta(0.0, x) - b1_poly(x)) for x in xs), 0.0


def _lngamma_ds0(policy):
    us = (0.5, 1.0, 2.0, 5.0, 20.0)
    return max(abs(hurwitz_zeta_ds0(u) - (log_gamma(u) - HALF_LOG_2PI)) for u in us), 0.0


def _corollary_vs_closed(policy):
    capped = TruncationPolicy(min(policy.max_terms, COROLLARY_MAX_OUTER), policy.tail_tol)
    us = (0.5, 1.0, 2.0, 3.5, 10.0)
    errs = [
        abs(dphi_ds_corollary(CorollaryArgs(-1.0, 0, u), capped).value - dphi_ds_closed(ZSign.NEG_ONE, u))
        for u in us
    ]
    return max(errs), 0.0


def _raising_identity(policy):
    return max(raising_residual(z, s, u, policy) for z, s, u in RAISING_GRID), 0.0


def _exp_s(policy):
    return math.exp(s_constant(48)), HALF_PI


@dataclass(frozen=True)
class _Entry:
    description: str
    tol: float
    run: Callable[[TruncationPolicy], tuple[float, float]]


REGISTRY: dict[str, _Entry] = dict(
    sorted(
        {
            "B1_BRIDGE": _Entry("-zeta(0, x) equals B_1(x) = x - 1/2", 1e-10, _b1_bridge),
            "COROLLARY_VS_CLOSED": _Entry(
                "double series for dPhi/ds(-1, 0, u) matches ln(G(u/2)/(G((u+1)/2) sqrt 2))",
                1e-9,
                _corollary_vs_closed,
            ),
            "DUPLICATION": _Entry("Legendre duplication residual, 1000 random n in (0, 1e4)", 1e-11, _duplication),
            "EXP_S_EQUALS_HALF_PI": _Entry("exp(s) at depth 48 equals pi/2", 1e-10, _exp_s),
            "HYDROGEN_BRIDGE": _Entry(
                "(pi/2) Gamma(n+1)^2/(Gamma(n+1/2)Gamma(n+3/2)) equals Wallis partial, n <= 1e4 (relative)",
                1e-11,
                _hydrogen_bridge,
            ),
            "LNGAMMA_DS0": _Entry("d/ds zeta(s, u) at s = 0 equals ln(Gamma(u)/sqrt(2 pi))", 1e-8, _lngamma_ds0),
            "RAISING_IDENTITY": _Entry(
                "Phi(z, s-1, u) = (u + z d/dz) Phi(z, s, u) on a 45-point grid", 1e-8, _raising_identity
            ),
            "RATIO_ROUTES": _Entry(
                "Gamma-ratio products agree with log-gamma route, n <= 1000 (relative)", 1e-12, _ratio_routes
            ),
            # exact gap at n = 1e5 is 1/(2 pi n) (1 + O(1/n)) = 1.5915e-6
            "SINE_AT_HALF_PI": _Entry("Euler sine product at x = pi/2, n = 1e5, equals 2/pi", 1.6e-6, _sine_at_half_pi),
            "WALLIS_LIMIT": _Entry("Wallis partial product at n = 1e6 equals pi/2", 4.0e-7, _wallis_limit),
        }.items()
    )
)


def run_identity_suite(
    tol_overrides: Optional[Mapping[str, float]] = None,
    policy: Optional[TruncationPolicy] = None,
    jobs: int = 1,
    timestamp: bool = True,
) -> SuiteReport:
    """Run every registered check and collect a :class:`SuiteReport`.

    Unknown ids in ``tol_overrides`` raise :class:`UsageError` before any
    check runs.  Checks may run on ``jobs`` threads; the report keeps
    registry (id) order either way.
    """
    overrides = dict(tol_overrides or {})
    unknown = sorted(set(overrides) - set(REGISTRY))
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    policy = policy or TruncationPolicy()

    def run_one(item):
        cid, entry = item
        lhs, rhs = entry.run(policy)
        tol = float(overrides.get(cid, entry.tol))
        err = abs(lhs - rhs)
        return IdentityCheck(cid, entry.description, float(lhs), float(rhs), err, tol, bool(err <= tol))

    items = list(REGISTRY.items())
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(run_one, items))
    else:
        checks = [run_one(item) for item in items]
    config = {
        "tol_overrides": {k: float(overrides[k]) for k in sorted(overrides)},
        "max_terms": policy.max_terms,
        "tail_tol": policy.tail_tol,
    }
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None
    return SuiteReport(checks, all(c.passed for c in checks), config, stamp)


# --------------------------------------------------------------------------
# Acceleration benchmark
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AccelRow:
    method: str
    n: int
    estimate: float
    target: float
    abs_err: float
    seconds: float


def accel_benchmark(method: AccelMethod | str, n: int, levels: int = 4) -> AccelRow:
    """Error reached by one acceleration method at budget ``n``.

    RAW, AITKEN and RICHARDSON work on Wallis partials at n, 2n, ..., 2^levels n
    (target pi/2); ALT_CVZ sums the alternating harmonic series from its
    first n partial sums (target ln 2).
    """
    method = AccelMethod(method)
    if int(n) != n or n < 3:
        raise UsageError("accel-bench needs n >= 3")
    n = int(n)
    start = time.perf_counter()
    if method is AccelMethod.ALT_CVZ:
        target = math.log(2.0)
        partials = np.cumsum([(-1.0) ** k / (k + 1.0) for k in range(n)])
        est = accelerate(partials, method)
    else:
        target = HALF_PI
        idx = [n * 2**k for k in range(levels + 1)]
        full = wallis_partials(idx[-1])
        est = accelerate([float(full[i - 1]) for i in idx], method, levels=levels)
    elapsed = time.perf_counter() - start
    return AccelRow(method.value, n, float(est), target, abs(float(est) - target), elapsed)


# --------------------------------------------------------------------------
# Emitters
# --------------------------------------------------------------------------


def format_float(x: float) -> str:
    # shortest repr that round-trips; never more than 17 significant digits
    return repr(float(x))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return str(value)


def _row_dict(row) -> dict[str, Any]:
    if hasattr(row, "to_dict"):
        return row.to_dict()
    if dataclasses.is_dataclass(row):
        return dataclasses.asdict(row)
    return dict(row)


def _field_names(row_type) -> list[str]:
    names = [f.name for f in dataclasses.fields(row_type)]
    return ["pass" if n == "passed" else n for n in names]


def _to_json(obj) -> str:
    return json.dumps(obj, indent=2, default=_json_default) + "\n"


def _json_default(value):
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    raise TypeError(f"not JSON serialisable: {type(value).__name__}")


def render(report_or_rows, fmt: str = "json", row_type=None) -> str:
    """Text form of a report or a row sequence, in CSV or JSON."""
    fmt = fmt.lower()
    if fmt not in ("csv", "json"):
        raise UsageError(f"unknown format {fmt!r}")
    if isinstance(report_or_rows, SuiteReport):
        if fmt == "json":
            return _to_json(report_or_rows.to_dict())
        rows: Sequence = report_or_rows.checks
        row_type = IdentityCheck
    else:
        rows = list(report_or_rows)
        if fmt == "json":
            return _to_json([_row_dict(r) for r in rows])
    if rows and row_type is None:
        row_type = type(rows[0])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    if row_type is not None:
        header = _field_names(row_type)
    elif rows:
        header = list(_row_dict(rows[0]))
    else:
        raise UsageError("an empty row sequence needs row_type to write a CSV header")
    writer.writerow(header)
    for r in rows:
        d = _row_dict(r)
        writer.writerow([_cell(d[h]) for h in header])
    return buf.getvalue()


def emit(report_or_rows, fmt: str = "json", destination=None, row_type=None) -> None:
    """Write a report or rows to ``destination`` (path) or standard output.

    ``None`` or ``"-"`` means standard output.  ``row_type`` is only needed to
    produce a header for an empty CSV.
    """
    text = render(report_or_rows, fmt, row_type)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc
