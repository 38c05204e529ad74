"""Pure numpy kernels; the reference implementations for the numba backend."""

from __future__ import annotations

import numpy as np

__all__ = ["eval_masks", "inclusion_cross", "window_lengths"]


def eval_masks(word, e, masks, target):
    """Evaluate every masked-out subword of ``word`` and look for ``target``.

    ``word`` holds generator letters, ``masks`` is a boolean matrix with one
    subword per row, ``target`` is a window.  Each kept letter multiplies on
    the right.  Returns the first row index whose subword evaluates to the
    target window, or -1.
    """
    word = np.asarray(word, dtype=np.int64)
    masks = np.asarray(masks, dtype=bool)
    target = np.asarray(target, dtype=np.int64)
    e = int(e)
    m = masks.shape[0]
    wins = np.tile(np.arange(1, e + 1, dtype=np.int64), (m, 1))
    for p in range(word.shape[0]):
        sel = masks[:, p]
        if not sel.any():
            continue
        letter = int(word[p])
        if letter == 0:
            first = wins[sel, e - 1] - e
            last = wins[sel, 0] + e
            wins[sel, 0] = first
            wins[sel, e - 1] = last
        else:
            left = wins[sel, letter - 1]
            wins[sel, letter - 1] = wins[sel, letter]
            wins[sel, letter] = left
    hits = np.nonzero((wins == target).all(axis=1))[0]
    return int(hits[0]) if hits.size else -1


def inclusion_cross(left, right):
    """Componentwise-inclusion table between two batches of padded part rows.

    ``left`` is (n, k) and ``right`` is (m, k); the result is a boolean
    (n, m) table with entry [a, b] true when ``left[a] <= right[b]``
    everywhere.  Works in row chunks to bound the broadcast size.
    """
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    n = left.shape[0]
    out = np.empty((n, right.shape[0]), dtype=bool)
    step = max(1, 4_000_000 // max(1, right.size))
    for i in range(0, n, step):
        chunk = left[i : i + step]
        out[i : i + step] = (chunk[:, None, :] <= right[None, :, :]).all(axis=2)
    return out


def window_lengths(windows, e):
    """Coxeter length of each window row: sum over pairs of crossing counts."""
    windows = np.asarray(windows, dtype=np.int64)
    e = int(e)
    i, j = np.triu_indices(e, k=1)
    diff = windows[:, j] - windows[:, i]
    return np.abs(diff // e).sum(axis=1)
