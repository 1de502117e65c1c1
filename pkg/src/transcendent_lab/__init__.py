"""Numerical checks of the Wallis / hydrogen-atom / Lerch-transcendent identities for pi/2."""

from .core_numerics import (
    AccelMethod,
    SeriesResult,
    TruncationPolicy,
    accelerate,
    alt_series_sum,
    bernoulli_numbers,
    central_diff,
    log_binomial,
    log_gamma,
    log_gamma_ratio,
)
from .errors import (
    ArityError,
    ContinuationRequired,
    DomainError,
    HypothesisError,
    LabError,
    PoleError,
    UnsupportedError,
)
from .hydrogen import (
    VariationalRow,
    variational_ladder,
    variational_ratio,
    variational_ratio_reduced,
    wallis_from_hydrogen,
)
from .kernels import BACKEND
from .lerch import (
    CorollaryArgs,
    LerchArgs,
    Region,
    ZSign,
    b1_poly,
    dphi_ds_closed,
    dphi_ds_corollary,
    hurwitz_zeta,
    hurwitz_zeta_ds0,
    phi,
    raising_residual,
)
from .products import (
    GammaRatioVariant,
    LadderRow,
    euler_sine_partial,
    gamma_ratio,
    legendre_duplication_residual,
    s_constant,
    sondow_pi_product,
    wallis_partial,
)
from .report import IdentityCheck, SuiteReport, emit, run_identity_suite

__version__ = "0.1.0"

__all__ = [
    "AccelMethod",
    "ArityError",
    "BACKEND",
    "ContinuationRequired",
    "CorollaryArgs",
    "DomainError",
    "GammaRatioVariant",
    "HypothesisError",
    "IdentityCheck",
    "LabError",
    "LadderRow",
    "LerchArgs",
    "PoleError",
    "Region",
    "SeriesResult",
    "SuiteReport",
    "TruncationPolicy",
    "UnsupportedError",
    "VariationalRow",
    "ZSign",
    "accelerate",
    "alt_series_sum",
    "b1_poly",
    "bernoulli_numbers",
    "central_diff",
    "dphi_ds_closed",
    "dphi_ds_corollary",
    "emit",
    "euler_sine_partial",
    "gamma_ratio",
    "hurwitz_zeta",
    "hurwitz_zeta_ds0",
    "legendre_duplication_residual",
    "log_binomial",
    "log_gamma",
    "log_gamma_ratio",
    "phi",
    "raising_residual",
    "run_identity_suite",
    "s_constant",
    "sondow_pi_product",
    "variational_ladder",
    "variational_ratio",
    "variational_ratio_reduced",
    "wallis_from_hydrogen",
    "wallis_partial",
]
