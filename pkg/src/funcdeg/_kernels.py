"""Backend selection for the hot loops.

The compiled extension is preferred; the pure-Python module is used when it is
not built, and for any call whose moduli do not fit comfortably in 64 bits.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_FITS = 1 << 31


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "cython" and _ckernels is not None:
        return _ckernels
    raise ValueError(f"kernel backend {name!r} is not available")


def _pick(*moduli: int) -> ModuleType:
    if _ckernels is not None and all(0 < m < _FITS for m in moduli):
        return _ckernels
    return _pykernels


def delta_flat(values, shape, cmod, axis):
    return _pick(*cmod).delta_flat(values, tuple(shape), tuple(cmod), axis)


def max_nonzero_order(values, shape, cmod, cap):
    return _pick(*cmod).max_nonzero_order(values, tuple(shape), tuple(cmod), cap)


def partial_nonzero_order(values, shape, cmod, axis, cap):
    return _pick(*cmod).partial_nonzero_order(values, tuple(shape), tuple(cmod), axis, cap)


def convolve(a, b, shape, m):
    return _pick(m).convolve(a, b, tuple(shape), m)


def cyclic_mul(a, b, m):
    return _pick(m).cyclic_mul(a, b, m)
