"""Time the numba kernels against the pure-numpy fallbacks.

Run as a script; it imports both backend modules directly, so the
ABACORE_BACKEND switch has no effect here.
"""

import time
from itertools import combinations

import numpy as np

from abacore.kernels import _numpy

try:
    from abacore.kernels import _numba

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    print("numba not installed, timing the numpy fallback only")


def best_of(fn, args, reps):
    # One untimed call first so numba's compilation is not on the clock.
    fn(*args)
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def eval_masks_workload(rng):
    e = 4
    word = tuple(int(x) for x in rng.integers(0, e, size=12))
    masks = np.array(
        [[k in picked for k in range(12)] for picked in combinations(range(12), 6)],
        dtype=np.bool_,
    )
    # Evaluate one mid-array mask by hand to get a target that hits.
    win = list(range(1, e + 1))
    for pos in range(12):
        if not masks[600, pos]:
            continue
        i = word[pos]
        if i == 0:
            win[0], win[-1] = win[-1] - e, win[0] + e
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
    target = np.array(win, dtype=np.int64)
    word_arr = np.array(word, dtype=np.int64)
    return (word_arr, e, masks, target), 200


def inclusion_workload(rng):
    left = -np.sort(-rng.integers(0, 30, size=(400, 40)), axis=1)
    right = -np.sort(-rng.integers(0, 30, size=(400, 40)), axis=1)
    return (left, right), 50


def window_lengths_workload(rng):
    windows = rng.integers(-50, 50, size=(100_000, 4)).astype(np.int64)
    return (windows, 4), 20


def main():
    rng = np.random.default_rng(1)
    rows = []
    for name, maker, attr in [
        ("eval_masks (924 masks, word 12)", eval_masks_workload, "eval_masks"),
        ("inclusion_cross (400 x 400)", inclusion_workload, "inclusion_cross"),
        ("window_lengths (100k windows)", window_lengths_workload, "window_lengths"),
    ]:
        args, reps = maker(rng)
        t_np = best_of(getattr(_numpy, attr), args, reps)
        if HAS_NUMBA:
            t_nb = best_of(getattr(_numba, attr), args, reps)
            out_np = getattr(_numpy, attr)(*args)
            out_nb = getattr(_numba, attr)(*args)
            if not np.array_equal(np.asarray(out_np), np.asarray(out_nb)):
                raise SystemExit(f"backend disagreement in {attr}")
            rows.append((name, t_np, t_nb))
        else:
            rows.append((name, t_np, None))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload'.ljust(width)}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, t_np, t_nb in rows:
        np_ms = f"{t_np * 1e3:.3f} ms"
        if t_nb is None:
            print(f"{name.ljust(width)}  {np_ms:>10}  {'-':>10}  {'-':>8}")
        else:
            nb_ms = f"{t_nb * 1e3:.3f} ms"
            print(
                f"{name.ljust(width)}  {np_ms:>10}  {nb_ms:>10}  "
                f"{t_np / t_nb:>7.1f}x"
            )


if __name__ == "__main__":
    main()
