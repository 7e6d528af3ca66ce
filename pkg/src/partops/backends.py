"""Kernel backend selection.

The compiled Cython kernel is preferred when importable; the pure-Python
kernel is always available.  Both expose the same module-level functions
(see :mod:`partops._kernel_py`).
"""

from __future__ import annotations

from . import _kernel_py

try:
    from . import _kernel_cy
except ImportError:
    _kernel_cy = None

DEFAULT = _kernel_cy if _kernel_cy is not None else _kernel_py


def available_backends():
    names = ["python"]
    if _kernel_cy is not None:
        names.append("compiled")
    return names


def get_backend(name=None):
    """Resolve a backend by name: None/'auto', 'python', or 'compiled'."""
    if name is None or name == "auto":
        return DEFAULT
    if name == "python":
        return _kernel_py
    if name == "compiled":
        if _kernel_cy is None:
            raise RuntimeError("compiled kernel is not available")
        return _kernel_cy
    raise ValueError(f"unknown backend {name!r}")
