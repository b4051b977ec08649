"""Kernel backend selection.

The compiled extension is used when it imported cleanly; set
``CROSSPLIT_KERNELS=python`` or ``CROSSPLIT_KERNELS=c`` to force a backend.
A forced backend that is unavailable raises at import so misconfiguration
never falls through silently.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None


def available_backends():
    names = ["python"]
    if _ckernels is not None:
        names.insert(0, "c")
    return tuple(names)


_forced = os.environ.get("CROSSPLIT_KERNELS", "").strip().lower()
if _forced == "python":
    _impl = _pykernels
elif _forced == "c":
    if _ckernels is None:
        raise ImportError(
            "CROSSPLIT_KERNELS=c but the compiled kernel extension is not available"
        )
    _impl = _ckernels
elif _forced == "":
    _impl = _ckernels if _ckernels is not None else _pykernels
else:
    raise ImportError(f"unrecognized CROSSPLIT_KERNELS value: {_forced!r}")

BACKEND: str = _impl.NAME

split_point_sorted = _impl.split_point_sorted
segment_intercepts_sorted = _impl.segment_intercepts_sorted
bartlett_lrv = _impl.bartlett_lrv
