"""Kernel backend selection.

Imports the compiled extension when available and falls back to the
pure-Python implementation otherwise. Set UPSUM_PURE_PYTHON=1 to force the
fallback (useful for debugging and for the backend benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("UPSUM_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = "compiled" if _impl.__name__.endswith("._kernels") else "python"

jaro = _impl.jaro
jaro_winkler = _impl.jaro_winkler
jw_extended = _impl.jw_extended
lcs_length = _impl.lcs_length
lcs_norm = _impl.lcs_norm
max_lcs_norm = _impl.max_lcs_norm

__all__ = [
    "BACKEND",
    "jaro",
    "jaro_winkler",
    "jw_extended",
    "lcs_length",
    "lcs_norm",
    "max_lcs_norm",
]
