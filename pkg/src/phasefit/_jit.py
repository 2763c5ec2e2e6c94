"""Optional numba acceleration.

Both kernel families are always importable; ``PHASEFIT_DISABLE_NUMBA=1`` only
changes which one the public dispatchers use. The flag is read at import time.
"""
import os
import warnings

DISABLED = os.environ.get("PHASEFIT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and not DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(func):
    """Compile ``func`` with ``numba.njit(cache=True)``; identity without numba."""
    if numba is None:
        return func
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return numba.njit(cache=True)(func)
