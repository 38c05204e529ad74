"""Hot loops with a numba backend and a pure-numpy fallback.

The backend is picked once at import time from the ``ABACORE_BACKEND``
environment variable: ``numba`` forces the jitted kernels, ``numpy`` forces
the fallback, and ``auto`` (or unset) tries numba first.  Both backends
compute identical results; only the speed differs.
"""

from __future__ import annotations

import os

__all__ = ["BACKEND", "eval_masks", "inclusion_cross", "window_lengths"]

_choice = os.environ.get("ABACORE_BACKEND", "auto").strip().lower()

if _choice in ("auto", ""):
    try:
        from ._numba import eval_masks, inclusion_cross, window_lengths

        BACKEND = "numba"
    except ImportError:
        from ._numpy import eval_masks, inclusion_cross, window_lengths

        BACKEND = "numpy"
elif _choice == "numba":
    from ._numba import eval_masks, inclusion_cross, window_lengths

    BACKEND = "numba"
elif _choice == "numpy":
    from ._numpy import eval_masks, inclusion_cross, window_lengths

    BACKEND = "numpy"
else:
    raise ValueError(
        f"ABACORE_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )
