"""Kernel backend selection: numba-compiled loops or pure NumPy.

Set ``CONFED_NUMBA=0`` in the environment *before importing confed* to select
the pure-NumPy fallback path.  The default uses ``numba.njit`` kernels when
numba is importable.  Both paths execute the identical floating-point
operation sequence, so results agree bitwise (see tests/test_backend.py and
benchmarks/bench_kernels.py for the speed difference).
"""

import os

_flag = os.environ.get("CONFED_NUMBA", "1").strip().lower()
_want_numba = _flag not in ("0", "false", "off")

NUMBA_ENABLED = False
if _want_numba:
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False


def jit(fn):
    """Compile with numba when the numba backend is active, else return fn."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True, nogil=True)(fn)
    return fn
