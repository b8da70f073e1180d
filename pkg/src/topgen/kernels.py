"""Select the compiled kernels when available, else the numpy fallback.

Set ``TOPGEN_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
torus_sweep = _kernels_py.torus_sweep
kac_zero_counts = _kernels_py.kac_zero_counts

if os.environ.get("TOPGEN_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        torus_sweep = _kernels.torus_sweep
        kac_zero_counts = _kernels.kac_zero_counts

__all__ = ["BACKEND", "torus_sweep", "kac_zero_counts"]
