"""Kernel backend selection: compiled extension if available, else pure Python.

Set GAITMODE_BACKEND=python to force the fallback (e.g. for benchmarking).
"""

import os

from . import _kernels_py

_FORCE = os.environ.get("GAITMODE_BACKEND", "").strip().lower()

if _FORCE in ("", "auto", "compiled"):
    try:
        from . import _speedups as _active
    except ImportError:
        if _FORCE == "compiled":
            raise ImportError(
                "GAITMODE_BACKEND=compiled but gaitmode._speedups is not built; "
                "reinstall with a C compiler available"
            )
        _active = _kernels_py
elif _FORCE == "python":
    _active = _kernels_py
else:
    raise ValueError(f"unknown GAITMODE_BACKEND={_FORCE!r}")

kernels = _active
COMPILED = bool(kernels.COMPILED)


def backend_name() -> str:
    return "compiled" if COMPILED else "python"


def available_backends() -> dict:
    """Name -> kernel module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _speedups
        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
