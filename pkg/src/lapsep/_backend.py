"""Kernel backend selection.

The compiled Cython kernels are preferred when the extension built; the
pure NumPy module is a drop-in replacement.  Set LAPSEP_PURE=1 to force the
fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LAPSEP_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
degree_condition_batch = _impl.degree_condition_batch
charpoly_int64 = _impl.charpoly_int64
