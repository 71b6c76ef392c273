"""Numba acceleration layer with a pure-Python fallback.

Every hot kernel in this package is decorated with :func:`jitted`.  When numba
is installed and ``WEYLSHELL_NO_NUMBA`` is unset, kernels are compiled with
``numba.njit(cache=True)``; otherwise the plain Python function runs.  Both
paths execute the same code, so results are identical up to float scheduling.

Set ``WEYLSHELL_NO_NUMBA=1`` to force the fallback (used by the benchmark and
by CI environments without an LLVM toolchain).
"""

import os

NUMBA_DISABLED = os.environ.get("WEYLSHELL_NO_NUMBA", "").strip() not in ("", "0")

try:
    if NUMBA_DISABLED:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def jitted(func=None, **kwargs):
    """njit the function when numba is active, otherwise return it unchanged."""

    def wrap(f):
        if HAVE_NUMBA:
            kwargs.setdefault("cache", True)
            return numba.njit(**kwargs)(f)
        return f

    if func is not None:
        return wrap(func)
    return wrap


def set_threads(n):
    """Best-effort thread-count plumbing for numba's threading layer."""
    if HAVE_NUMBA and n and n > 0:
        try:
            numba.set_num_threads(n)
        except ValueError:
            pass


def backend_name():
    return "numba" if HAVE_NUMBA else "python"
