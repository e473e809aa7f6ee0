"""Vectorized numpy backend.

Every function loops over positions or group elements in Python and over
rows (partitions) in numpy, so the per-call overhead is O(n) array ops.
"""

from __future__ import annotations

import numpy as np

LABEL = np.int8


def nc_rgs(n: int) -> np.ndarray:
    """Restricted growth strings of all noncrossing partitions of [n], lex order.

    Level-by-level expansion: a prefix carries its stack of open block labels.
    Children of a prefix are "join stack[j]" for each j (truncating the stack
    to depth j+1), then "open a new block".
    """
    rgs = np.zeros((1, n), dtype=LABEL)
    stack = np.zeros((1, n), dtype=LABEL)
    depth = np.ones(1, dtype=np.int64)
    nblocks = np.ones(1, dtype=np.int64)
    for i in range(1, n):
        fan = depth + 1
        parent = np.repeat(np.arange(len(rgs)), fan)
        offsets = np.cumsum(fan) - fan
        choice = np.arange(len(parent)) - offsets[parent]
        rgs = rgs[parent]
        stack = stack[parent]
        pdepth = depth[parent]
        nblocks = nblocks[parent]
        rows = np.arange(len(parent))
        opening = choice == pdepth
        joined = ~opening
        label = np.where(opening, nblocks, 0)
        label[joined] = stack[rows[joined], choice[joined]]
        rgs[:, i] = label
        stack[rows[opening], pdepth[opening]] = nblocks[opening]
        depth = np.where(opening, pdepth + 1, choice + 1)
        nblocks = nblocks + opening
    return rgs


def all_rgs(n: int) -> np.ndarray:
    """Restricted growth strings of all partitions of [n], lex order."""
    rgs = np.zeros((1, n), dtype=LABEL)
    top = np.zeros(1, dtype=np.int64)
    for i in range(1, n):
        fan = top + 2
        parent = np.repeat(np.arange(len(rgs)), fan)
        offsets = np.cumsum(fan) - fan
        choice = np.arange(len(parent)) - offsets[parent]
        rgs = rgs[parent]
        rgs[:, i] = choice
        top = np.maximum(top[parent], choice)
    return rgs


def _canonical_codes(labels: np.ndarray, n: int) -> np.ndarray:
    """Relabel each row by first occurrence and pack it base n into int64."""
    rows = np.arange(len(labels))
    seen = np.zeros((len(labels), n), dtype=bool)
    new = np.zeros((len(labels), n), dtype=np.int64)
    count = np.zeros(len(labels), dtype=np.int64)
    code = np.zeros(len(labels), dtype=np.int64)
    for j in range(n):
        lab = labels[:, j]
        fresh = ~seen[rows, lab]
        new[rows[fresh], lab[fresh]] = count[fresh]
        count += fresh
        seen[rows, lab] = True
        code = code * n + new[rows, lab]
    return code


def _source_columns(n: int, shift: int, reflect: bool) -> np.ndarray:
    j = np.arange(n)
    src = (j - shift) % n
    return n - 1 - src if reflect else src


def transform_codes(rgs: np.ndarray, shift: int, reflect: bool) -> np.ndarray:
    """Packed canonical codes of R^shift (C(p) if reflect else p), row by row."""
    n = rgs.shape[1]
    return _canonical_codes(rgs[:, _source_columns(n, shift, reflect)], n)


def orbit_min_codes(rgs: np.ndarray, dihedral: bool) -> np.ndarray:
    """Least packed code over the rotation (or rotation+complement) orbit."""
    n = rgs.shape[1]
    best = transform_codes(rgs, 0, False)
    for reflect in (False, True) if dihedral else (False,):
        for shift in range(n):
            if shift == 0 and not reflect:
                continue
            np.minimum(best, transform_codes(rgs, shift, reflect), out=best)
    return best
