"""Kernel backend selection.

Two interchangeable kernel sets exist: `reference` (pure numpy) and
`compiled` (numba jitted loops).  The active one is chosen at import
time from the WEYLLAB_BACKEND environment variable:

    auto   use the jitted kernels if numba imports, else numpy (default)
    numba  require the jitted kernels, fail loudly if numba is missing
    numpy  force the pure numpy kernels

`set_backend` switches at runtime; benchmarks and parity tests use it to
run both sets on identical inputs.
"""

from __future__ import annotations

import os

from ..errors import InvalidSpecError
from . import reference

_CHOICES = ("auto", "numba", "numpy")

_active = None
_active_name = None


def _load_compiled():
    from . import compiled  # deferred: importing numba is slow

    return compiled


def set_backend(name: str):
    """Select the kernel set by name ('auto', 'numba' or 'numpy')."""
    global _active, _active_name
    if name not in _CHOICES:
        raise InvalidSpecError(f"backend must be one of {_CHOICES}, got {name!r}")
    if name == "numpy":
        _active = reference
    elif name == "numba":
        _active = _load_compiled()
    else:
        try:
            _active = _load_compiled()
        except ImportError:
            _active = reference
    _active_name = _active.NAME
    return _active


def kernels():
    """The active kernel module."""
    global _active
    if _active is None:
        set_backend(os.environ.get("WEYLLAB_BACKEND", "auto"))
    return _active


def backend_name() -> str:
    kernels()
    return _active_name


def get_backend(name: str):
    """Fetch a kernel module by concrete name without switching."""
    if name == "numpy":
        return reference
    if name == "numba":
        return _load_compiled()
    raise InvalidSpecError(f"no backend named {name!r}")
