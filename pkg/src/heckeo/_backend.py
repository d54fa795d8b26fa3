"""Select the compiled kernels when available, else the pure-Python ones.

Set ``HECKEO_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the tests that compare both backends).
"""
import os

from . import _kernels_py

if os.environ.get("HECKEO_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

echelon = _impl.echelon
reduce_vector = _impl.reduce_vector
mul_truncated = _impl.mul_truncated
