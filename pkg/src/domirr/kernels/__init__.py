"""Kernel dispatch: compiled (numba) and pure-Python twins of one source.

``_impl.py`` is loaded twice from the same file, once plain and once under
``@njit``.  The active mode is chosen by the ``DOMIRR_KERNELS`` environment
variable (``numba`` or ``python``; default is numba when importable) and can
be switched at runtime with :func:`set_mode` / :func:`using`, which is how the
benchmark times both paths in one process.

The pure path works on plain ints, so it has no 64-bit width limit; the
compiled path requires bitmasks to fit in int64 (the wrappers enforce this).
"""

from __future__ import annotations

import importlib.util
import os
import sys
from contextlib import contextmanager
from pathlib import Path

import numpy as np

_SRC = Path(__file__).with_name("_impl.py")
_ENV_VAR = "DOMIRR_KERNELS"

try:
    import numba  # noqa: F401
    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False


def _load_impl(jit: bool):
    name = f"domirr.kernels._impl_{'numba' if jit else 'python'}"
    if name in sys.modules:
        return sys.modules[name]
    spec = importlib.util.spec_from_file_location(name, _SRC)
    mod = importlib.util.module_from_spec(spec)
    mod._WITH_JIT = jit
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


def available_modes() -> tuple[str, ...]:
    return ("numba", "python") if _HAVE_NUMBA else ("python",)


def _default_mode() -> str:
    requested = os.environ.get(_ENV_VAR, "").strip().lower()
    if requested in ("numba", "python"):
        if requested == "numba" and not _HAVE_NUMBA:
            raise RuntimeError(
                f"{_ENV_VAR}=numba requested but numba is not importable"
            )
        return requested
    if requested:
        raise RuntimeError(
            f"unrecognized {_ENV_VAR}={requested!r}; use 'numba' or 'python'"
        )
    return "numba" if _HAVE_NUMBA else "python"


_mode = _default_mode()


def mode() -> str:
    """Name of the active kernel mode."""
    return _mode


def set_mode(name: str) -> None:
    global _mode
    if name not in available_modes():
        raise ValueError(f"kernel mode {name!r} not available "
                         f"(have {available_modes()})")
    _mode = name


@contextmanager
def using(name: str):
    """Temporarily switch kernel mode (used by tests and the benchmark)."""
    previous = _mode
    set_mode(name)
    try:
        yield get()
    finally:
        set_mode(previous)


def get():
    """The active kernel namespace (a module object)."""
    return _load_impl(_mode == "numba")


def warm_up() -> None:
    """Force compilation of the active mode (no-op for the pure path)."""
    get()


# --- mode-aware buffer helpers ------------------------------------------

def mask_buffer(size: int):
    """A writable buffer for bitmask values, sized for the active mode."""
    if _mode == "numba":
        return np.zeros(size, dtype=np.int64)
    return [0] * size


def mask_vector(values):
    """A read-only bitmask vector (e.g. adjacency masks) for the active mode."""
    if _mode == "numba":
        return np.asarray(list(values), dtype=np.int64)
    return [int(v) for v in values]


def int_buffer(size: int, init: int = 0):
    buf = np.full(size, init, dtype=np.int64)
    return buf


def int_buffer2(rows: int, cols: int):
    return np.zeros((rows, cols), dtype=np.int64)


def max_mask_bits() -> int:
    """Widest bitmask the active mode supports (None-like big value for pure)."""
    return 62 if _mode == "numba" else 1 << 30


def require_fits(bits: int, what: str) -> None:
    if bits > max_mask_bits():
        raise ValueError(
            f"{what} needs {bits}-bit masks, beyond the compiled kernels' "
            f"62-bit limit; set {_ENV_VAR}=python to use the pure fallback"
        )
