"""JIT switch for the hot kernels.

Kernels are written once as plain loops over numpy arrays. When numba is
importable and ``RANKED_COMMUNITIES_NUMBA`` is not set to ``0``, they are
compiled with ``numba.njit``; otherwise the same functions run as ordinary
Python, which is the reference (fallback) path.
"""
import os

_FLAG = os.environ.get("RANKED_COMMUNITIES_NUMBA", "1").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("0", "false", "no", "off")


def njit(func):
    """Compile ``func`` with numba in nopython mode, or return it unchanged."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func


def py_func(func):
    """Return the uncompiled Python function behind a (possibly) jitted kernel."""
    return getattr(func, "py_func", func)
