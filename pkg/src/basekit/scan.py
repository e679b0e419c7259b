"""Backend selection for the tuple-scan kernel.

The compiled extension is preferred when importable; otherwise the pure
Python kernel runs with identical semantics.  Range partitioning makes the
count associative, so any thread count (including one) yields the same
result; threads only pay off on the compiled backend, which releases the GIL.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _scan_py

if os.environ.get("BASEKIT_FORCE_PURE"):
    _scan_cy = None
else:
    try:  # pragma: no cover - exercised implicitly by whichever env built it
        from . import _scan_cy
    except ImportError:
        _scan_cy = None

BACKEND = "compiled" if _scan_cy is not None else "pure"


def backend_name() -> str:
    return BACKEND


def count_regular(stab_words: np.ndarray, depth: int, threads: int = 1) -> tuple[int, int]:
    """(count, nodes visited) of regular depth-tuples over the whole point set."""
    n_points = stab_words.shape[0]
    if _scan_cy is None:
        return _scan_py.count_regular(stab_words, depth)
    if threads <= 1 or n_points < 2 * threads:
        return _scan_cy.count_range(stab_words, depth, 0, n_points)
    bounds = np.linspace(0, n_points, threads + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [
            pool.submit(_scan_cy.count_range, stab_words, depth, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:])
            if a < b
        ]
        parts = [f.result() for f in futs]
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def find_first_regular(stab_words: np.ndarray, depth: int):
    """Lexicographically least regular depth-tuple, or None."""
    if _scan_cy is None:
        return _scan_py.find_first_regular(stab_words, depth)
    return _scan_cy.find_first(stab_words, depth)
