"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the NumPy
lane is used.  ``DIOSIEVE_BACKEND=python`` in the environment forces the
fallback (useful for benchmarking the two lanes against each other).
"""

from __future__ import annotations

import os

from . import _kernels_py


def _load():
    forced = os.environ.get("DIOSIEVE_BACKEND", "auto")
    if forced == "python":
        return _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    except ImportError:
        if forced == "compiled":
            raise
        return _kernels_py


kernels = _load()
BACKEND = kernels.BACKEND_NAME


def available_backends() -> dict[str, object]:
    """Map of importable backend name -> kernel module."""
    out: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
