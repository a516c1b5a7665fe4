"""Backend switch for the hot kernels.

Set ``KBINT_DISABLE_NUMBA=1`` to route the dispatchers in ``_kernels`` to
the pure-numpy implementations. The compiled variants are still built
(lazily) when numba is importable so the benchmark can compare both.
"""
import os

try:
    import numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_disabled = os.environ.get("KBINT_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

USE_NUMBA = HAVE_NUMBA and not _disabled
BACKEND = "numba" if USE_NUMBA else "numpy"


def jit(fn):
    """Compile ``fn`` in nopython mode, or return None without numba."""
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=True, nogil=True)(fn)
