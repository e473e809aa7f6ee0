"""Bulk kernels over arrays of restricted growth strings.

A batch of partitions of [n] is an ``(count, n)`` int8 array whose rows are
restricted growth strings (0-based block labels by first occurrence). Codes
pack a canonical row base ``n`` into an int64, so code order equals
lexicographic RGS order; this caps ``n`` at :data:`MAX_N`.

Two interchangeable backends implement the same functions: a numba one
(scalar loops under ``@njit``) and a vectorized numpy one. Numba is used when
importable unless ``NCPART_DISABLE_NUMBA`` is set to a non-empty value other
than ``0``.
"""

from __future__ import annotations

import os

import numpy as np

from . import _numpy

MAX_N = 15

_flag = os.environ.get("NCPART_DISABLE_NUMBA", "")
_disabled = _flag not in ("", "0")

if _disabled:
    _backend = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _numba
    except ImportError:
        _backend = _numpy
        BACKEND = "numpy"
    else:
        _backend = _numba
        BACKEND = "numba"


def backends() -> dict:
    """Every importable backend module by name (for benchmarks and tests)."""
    found = {"numpy": _numpy}
    try:
        from . import _numba as nb
    except ImportError:
        pass
    else:
        found["numba"] = nb
    return found


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"kernels support 1 <= n <= {MAX_N}, got {n}")


def nc_rgs(n: int) -> np.ndarray:
    """All noncrossing partitions of [n] as RGS rows, lexicographic order."""
    _check_n(n)
    return _backend.nc_rgs(n)


def all_rgs(n: int) -> np.ndarray:
    """All partitions of [n] as RGS rows, lexicographic order."""
    _check_n(n)
    return _backend.all_rgs(n)


def codes(rgs: np.ndarray) -> np.ndarray:
    """Packed codes of the rows themselves."""
    return _backend.transform_codes(rgs, 0, False)


def transform_codes(rgs: np.ndarray, shift: int, reflect: bool = False) -> np.ndarray:
    """Codes of ``rotate(p, shift)``, or of ``rotate(complement(p), shift)`` if ``reflect``."""
    _check_n(rgs.shape[1])
    return _backend.transform_codes(rgs, shift % rgs.shape[1], bool(reflect))


def orbit_min_codes(rgs: np.ndarray, dihedral: bool = False) -> np.ndarray:
    """Least code over each row's rotation orbit, or its dihedral orbit."""
    _check_n(rgs.shape[1])
    return _backend.orbit_min_codes(rgs, bool(dihedral))


def unpack(code: int, n: int) -> tuple[int, ...]:
    """Inverse of the base-n packing: the RGS of one code."""
    digits = []
    for _ in range(n):
        code, d = divmod(int(code), n)
        digits.append(d)
    return tuple(reversed(digits))
