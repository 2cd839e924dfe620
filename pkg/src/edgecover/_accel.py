"""JIT switch.

Set ``EDGECOVER_DISABLE_JIT=1`` (or have numba missing) to run every kernel
through its plain Python / numpy fallback.
"""
import os

JIT_DISABLED = os.environ.get("EDGECOVER_DISABLE_JIT", "").strip().lower() in {
    "1", "true", "yes", "on"}

try:
    from numba import njit as _njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    _njit = None
    HAS_NUMBA = False

USE_JIT = HAS_NUMBA and not JIT_DISABLED


def njit(*args, **kwargs):
    """``numba.njit`` when numba is present, identity decorator otherwise.

    Compiled either way if numba is importable, so the benchmark can compare
    both paths in one process; ``USE_JIT`` only decides which one callers get.
    """
    if not HAS_NUMBA:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
    return _njit(*args, **kwargs)
