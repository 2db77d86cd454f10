"""Kernel selection: compiled extension if built, pure Python otherwise.

Set SUBSPACECODES_PURE=1 in the environment to force the pure implementation
(used by the benchmark and by tests that exercise both paths).
"""

from __future__ import annotations

import os

from . import _kernels_py


def _select():
    if os.environ.get("SUBSPACECODES_PURE"):
        return _kernels_py
    try:
        from . import _kernels  # compiled extension

        return _kernels
    except ImportError:
        return _kernels_py


_impl = _select()

COMPILED: bool = _impl.COMPILED
gf2_rank = _impl.gf2_rank
code_min_distance = _impl.code_min_distance
nearest = _impl.nearest


def implementations() -> dict[str, object]:
    """All available kernel implementations, keyed by name."""
    out: dict[str, object] = {"pure": _kernels_py}
    try:
        from . import _kernels

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
