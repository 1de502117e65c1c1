"""Numba switch.

Set ``TRANSCENDENT_LAB_DISABLE_NUMBA=1`` to force the pure-numpy kernels.
"""

import os

_DISABLED = os.environ.get("TRANSCENDENT_LAB_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

USE_NUMBA = _numba is not None and not _DISABLED


def njit(func):
    """``numba.njit(cache=True)`` when numba is usable, else a no-op."""
    if _numba is None:
        return func
    return _numba.njit(cache=True)(func)
