"""Runtime selection of the summation/enumeration kernel.

The compiled extension is preferred; the pure-Python twin is used when
the extension is missing or when EISENSYM_PURE_PYTHON is set (any
non-empty value).  Both expose the same functions with identical
semantics.
"""

from __future__ import annotations

import os

if os.environ.get("EISENSYM_PURE_PYTHON"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as kernel


def backend_name() -> str:
    return kernel.BACKEND


def thread_limit() -> int:
    """Parallelism cap from BOWTIE_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("BOWTIE_THREADS", "1")))
    except ValueError:
        return 1
