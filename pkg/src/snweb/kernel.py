"""Selects the contraction kernel at import time.

The compiled extension ``_ckernel`` is used when it was built; set
``SNWEB_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _kernel_py

BACKEND = "python"
_impl = _kernel_py

if os.environ.get("SNWEB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py

apply_local = _impl.apply_local
prune = _impl.prune
add_into = _impl.add_into


def backends():
    """Every importable backend, keyed by name (for benchmarks and tests)."""
    found = {"python": _kernel_py}
    try:
        from . import _ckernel
        found["cython"] = _ckernel
    except ImportError:
        pass
    return found
