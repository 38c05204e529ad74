"""Jitted kernels; same contracts as the numpy backend, written as loops."""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["eval_masks", "inclusion_cross", "window_lengths"]


@njit(cache=True)
def _eval_masks(word, e, masks, target):
    m = masks.shape[0]
    n = word.shape[0]
    win = np.empty(e, dtype=np.int64)
    for row in range(m):
        for k in range(e):
            win[k] = k + 1
        for p in range(n):
            if not masks[row, p]:
                continue
            letter = word[p]
            if letter == 0:
                first = win[e - 1] - e
                win[e - 1] = win[0] + e
                win[0] = first
            else:
                win[letter - 1], win[letter] = win[letter], win[letter - 1]
        ok = True
        for k in range(e):
            if win[k] != target[k]:
                ok = False
                break
        if ok:
            return row
    return -1


@njit(cache=True)
def _inclusion_cross(left, right):
    n, k = left.shape
    m = right.shape[0]
    out = np.empty((n, m), dtype=np.bool_)
    for a in range(n):
        for b in range(m):
            ok = True
            for c in range(k):
                if left[a, c] > right[b, c]:
                    ok = False
                    break
            out[a, b] = ok
    return out


@njit(cache=True)
def _window_lengths(windows, e):
    n = windows.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for row in range(n):
        total = 0
        for i in range(e):
            for j in range(i + 1, e):
                d = windows[row, j] - windows[row, i]
                q = d // e
                total += q if q >= 0 else -q
        out[row] = total
    return out


def eval_masks(word, e, masks, target):
    return int(
        _eval_masks(
            np.asarray(word, dtype=np.int64),
            int(e),
            np.asarray(masks, dtype=np.bool_),
            np.asarray(target, dtype=np.int64),
        )
    )


def inclusion_cross(left, right):
    return _inclusion_cross(
        np.asarray(left, dtype=np.int64), np.asarray(right, dtype=np.int64)
    )


def window_lengths(windows, e):
    return _window_lengths(np.asarray(windows, dtype=np.int64), int(e))
