"""Backend selection for the hot sweep kernels.

The compiled Cython module is used when it imports; otherwise the
numpy/scipy fallback.  Set ``TITS3_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("TITS3_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

jacobi_sweep = _impl.jacobi_sweep

__all__ = ["BACKEND", "jacobi_sweep"]
