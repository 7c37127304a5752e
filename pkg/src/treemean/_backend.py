"""Kernel backend selection.

The compiled kernels are picked up automatically when the extension built
from ``_kernels_c.pyx`` is importable.  Set ``TREEMEAN_BACKEND=py`` to force
the pure-Python twins, or ``TREEMEAN_BACKEND=c`` to fail loudly if the
extension is missing.

The compiled statistics fold runs on 64-bit integers.  Every intermediate
it forms is bounded by 2*n*(2^(n-1) + n)^2, which stays below 2^63 for
n <= C_STATS_MAX_ORDER, so the fast path is exact on that range; larger
trees are transparently routed to the arbitrary-precision Python kernels.
"""

import os

from . import _kernels_py as py_kernels

_forced = os.environ.get("TREEMEAN_BACKEND", "").strip().lower()

c_kernels = None
if _forced != "py":
    try:
        from . import _kernels_c as c_kernels  # type: ignore[no-redef]
    except ImportError:
        if _forced == "c":
            raise
        c_kernels = None

kernels = c_kernels if c_kernels is not None else py_kernels
BACKEND = "py" if kernels is py_kernels else "c"

C_STATS_MAX_ORDER = 26
C_CODE_MAX_ORDER = 1024


def stats_kernel(n: int):
    """Kernel module to use for a stats fold on a tree of order n."""
    if kernels is py_kernels or n > C_STATS_MAX_ORDER:
        return py_kernels
    return kernels


def code_kernel(n: int):
    """Kernel module to use for canonical codes on a tree of order n."""
    if kernels is py_kernels or n > C_CODE_MAX_ORDER:
        return py_kernels
    return kernels
