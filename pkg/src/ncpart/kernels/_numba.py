"""Numba backend: the same contracts as ``_numpy``, written as scalar loops."""

from __future__ import annotations

import numpy as np
from numba import njit

LABEL = np.int8


@njit(cache=True, nogil=True)
def _fill_nc(out):
    count, n = out.shape
    rgs = np.zeros(n, dtype=np.int8)
    stack = np.zeros(n, dtype=np.int8)
    # per position: depth of the stack before the element, block count, next choice
    depth = np.zeros(n + 1, dtype=np.int64)
    nblocks = np.zeros(n + 1, dtype=np.int64)
    choice = np.zeros(n + 1, dtype=np.int64)
    saved = np.zeros((n + 1, n), dtype=np.int8)
    row = 0
    depth[1] = 1
    nblocks[1] = 1
    stack[0] = 0
    saved[1, :] = stack
    i = 1
    if n == 1:
        out[0, 0] = 0
        return 1
    choice[1] = 0
    while i >= 1:
        d = depth[i]
        c = choice[i]
        if c > d:
            i -= 1
            if i >= 1:
                choice[i] += 1
            continue
        stack[:] = saved[i, :]
        if c < d:
            rgs[i] = stack[c]
            nd = c + 1
            nb = nblocks[i]
        else:
            rgs[i] = nblocks[i]
            stack[d] = nblocks[i]
            nd = d + 1
            nb = nblocks[i] + 1
        if i == n - 1:
            out[row, :] = rgs
            row += 1
            choice[i] += 1
        else:
            depth[i + 1] = nd
            nblocks[i + 1] = nb
            saved[i + 1, :] = stack
            choice[i + 1] = 0
            i += 1
    return row


@njit(cache=True, nogil=True)
def _fill_all(out):
    count, n = out.shape
    rgs = np.zeros(n, dtype=np.int8)
    top = np.zeros(n, dtype=np.int64)
    row = 0
    while True:
        out[row, :] = rgs
        row += 1
        i = n - 1
        while i > 0 and rgs[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return row
        rgs[i] += 1
        top[i] = max(top[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            top[j] = top[i]


@njit(cache=True, nogil=True)
def _code(row, src, relabel):
    n = row.shape[0]
    relabel[:] = -1
    fresh = 0
    code = 0
    for j in range(n):
        lab = row[src[j]]
        if relabel[lab] < 0:
            relabel[lab] = fresh
            fresh += 1
        code = code * n + relabel[lab]
    return code


@njit(cache=True, nogil=True)
def _transform(rgs, shift, reflect):
    count, n = rgs.shape
    src = np.empty(n, dtype=np.int64)
    for j in range(n):
        s = (j - shift) % n
        src[j] = n - 1 - s if reflect else s
    relabel = np.empty(n, dtype=np.int64)
    out = np.empty(count, dtype=np.int64)
    for r in range(count):
        out[r] = _code(rgs[r], src, relabel)
    return out


@njit(cache=True, nogil=True)
def _orbit_min(rgs, dihedral):
    count, n = rgs.shape
    nsrc = 2 * n if dihedral else n
    srcs = np.empty((nsrc, n), dtype=np.int64)
    for g in range(nsrc):
        shift = g % n
        for j in range(n):
            s = (j - shift) % n
            srcs[g, j] = n - 1 - s if g >= n else s
    relabel = np.empty(n, dtype=np.int64)
    out = np.empty(count, dtype=np.int64)
    for r in range(count):
        best = _code(rgs[r], srcs[0], relabel)
        for g in range(1, nsrc):
            c = _code(rgs[r], srcs[g], relabel)
            if c < best:
                best = c
        out[r] = best
    return out


def nc_rgs(n: int) -> np.ndarray:
    from ..census import catalan

    out = np.empty((catalan(n), n), dtype=LABEL)
    _fill_nc(out)
    return out


def all_rgs(n: int) -> np.ndarray:
    from ..census import bell

    out = np.empty((bell(n), n), dtype=LABEL)
    _fill_all(out)
    return out


def transform_codes(rgs: np.ndarray, shift: int, reflect: bool) -> np.ndarray:
    return _transform(rgs, shift, reflect)


def orbit_min_codes(rgs: np.ndarray, dihedral: bool) -> np.ndarray:
    return _orbit_min(rgs, dihedral)
