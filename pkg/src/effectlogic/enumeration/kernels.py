"""Kernel backend selection.

The compiled kernel is used when it imports; setting ``EFFECTLOGIC_PURE_PYTHON``
to a non-empty value forces the pure-Python one.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernel


def _compiled() -> ModuleType | None:
    try:
        from . import _kernel
    except ImportError:
        return None
    return _kernel


def available() -> dict[str, ModuleType]:
    out = {"python": _pykernel}
    mod = _compiled()
    if mod is not None:
        out["compiled"] = mod
    return out


def get_kernel(name: str | None = None) -> ModuleType:
    """The named backend, or the default one when ``name`` is ``None``."""
    kernels = available()
    if name is None:
        name = BACKEND
    try:
        return kernels[name]
    except KeyError:
        raise ValueError(f"kernel {name!r} is not available (have {sorted(kernels)})") from None


BACKEND = "python" if os.environ.get("EFFECTLOGIC_PURE_PYTHON") or _compiled() is None else "compiled"
