"""Optional numba acceleration.

Set ``SHAPEDTW_DISABLE_NUMBA=1`` to force the pure-numpy kernels, e.g. on
platforms where numba is unavailable or for debugging.
"""
import os

_disabled = os.environ.get("SHAPEDTW_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError("numba disabled by SHAPEDTW_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        # no-op stand-in so decorated kernels still import
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrapper(func):
            return func

        return wrapper
