"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BCHFORGE_KERNEL=python (or =compiled) to force a choice; forcing
"compiled" when the extension is missing raises at import time rather than
silently degrading.
"""

from __future__ import annotations

import os
import warnings

from . import _kernel_py


def _load():
    forced = os.environ.get("BCHFORGE_KERNEL", "").strip().lower()
    if forced in ("python", "py"):
        return _kernel_py
    try:
        from . import _kernel_cy  # type: ignore[attr-defined]

        return _kernel_cy
    except ImportError:
        if forced in ("compiled", "c", "cy"):
            raise
        warnings.warn(
            "bchforge compiled kernel not available; falling back to the "
            "pure-Python search loops (correct, but much slower)",
            RuntimeWarning,
            stacklevel=2,
        )
        return _kernel_py


kernel = _load()
KERNEL_NAME = kernel.NAME


def get_kernel(name: str | None = None):
    """The active kernel module, or a specific one by name ("python"/"compiled")."""
    if name is None:
        return kernel
    if name in ("python", "py"):
        return _kernel_py
    if name in ("compiled", "c", "cy"):
        from . import _kernel_cy  # type: ignore[attr-defined]

        return _kernel_cy
    raise ValueError(f"unknown kernel {name!r}")
