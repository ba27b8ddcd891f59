"""Optional numba acceleration.

Set ``DICKE_NESS_NO_NUMBA=1`` to force the pure-numpy kernels, e.g. for
debugging or on platforms without numba.
"""
import logging
import os

_DISABLE = os.environ.get("DICKE_NESS_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    import numba

    logging.getLogger("numba").setLevel(logging.WARNING)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLE


def njit(func):
    """Compile ``func`` with numba (nopython, nogil, cached) if numba is importable.

    The undecorated function is returned when numba is missing, so kernels
    written in the numba subset still run as plain Python.
    """
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)
