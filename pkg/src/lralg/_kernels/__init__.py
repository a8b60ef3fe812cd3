"""Kernel backend selection.

The compiled extension is preferred when importable; the pure Python
module is the fallback and the reference semantics.  Set
LRALG_KERNELS=python to force the fallback (used by the benchmark and
the parity tests).
"""

import os

from . import pykernels

if os.environ.get("LRALG_KERNELS", "").lower() in {"py", "python", "pure"}:
    _impl = pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pykernels

BACKEND = "cython" if _impl is not pykernels else "python"

content = _impl.content
mat_mul = _impl.mat_mul
rref = _impl.rref


def backend() -> str:
    """Name of the kernel implementation in use: "cython" or "python"."""
    return BACKEND
