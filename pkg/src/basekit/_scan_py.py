"""Pure-Python tuple-scan kernel.

Counts (and locates) tuples over a point set whose pointwise stabilizer is
trivial, by depth-first descent over lexicographic prefixes with one bitset
intersection per node.  Bitsets are Python ints, bit i = element i of the
acting group, bit 0 = identity; a running mask equal to 1 means only the
identity survives, so every completion of the prefix is counted and the
subtree is skipped.
"""

from __future__ import annotations

import itertools

import numpy as np


def masks_from_words(stab_words: np.ndarray) -> list[int]:
    return [int.from_bytes(row.tobytes(), "little") for row in stab_words]


def count_regular_masks(
    masks: list[int], n_points: int, depth: int, lo: int = 0, hi: int | None = None
) -> tuple[int, int]:
    """(count, nodes visited) of regular depth-tuples with first coord in [lo, hi)."""
    if hi is None:
        hi = n_points
    if depth <= 0:
        raise ValueError("depth must be positive")
    pows = [n_points**i for i in range(depth)]
    full = -1  # AND-identity; masks carry only valid bits
    total = 0
    nodes = 0

    def rec(level: int, mask: int, a: int, b: int):
        nonlocal total, nodes
        rem = pows[depth - level - 1]
        descend = level + 1 < depth
        for p in range(a, b):
            m = mask & masks[p]
            nodes += 1
            if m == 1:
                total += rem
            elif descend:
                rec(level + 1, m, 0, n_points)

    rec(0, full, lo, hi)
    return total, nodes


def find_first_regular_masks(
    masks: list[int], n_points: int, depth: int
) -> tuple[int, ...] | None:
    """Lexicographically least regular depth-tuple, or None."""
    if depth <= 0:
        raise ValueError("depth must be positive")

    def rec(level: int, mask: int, prefix: tuple[int, ...]):
        for p in range(n_points):
            m = mask & masks[p]
            if m == 1:
                return prefix + (p,) + (0,) * (depth - level - 1)
            if level + 1 < depth:
                hit = rec(level + 1, m, prefix + (p,))
                if hit is not None:
                    return hit
        return None

    return rec(0, -1, ())


def iter_regular_masks(masks: list[int], n_points: int, depth: int):
    """Yield all regular depth-tuples in lexicographic order (lazily)."""
    if depth <= 0:
        raise ValueError("depth must be positive")

    def rec(prefix: tuple[int, ...], mask: int):
        level = len(prefix)
        for p in range(n_points):
            m = mask & masks[p]
            here = prefix + (p,)
            if m == 1:
                rem = depth - level - 1
                if rem == 0:
                    yield here
                else:
                    for suffix in itertools.product(range(n_points), repeat=rem):
                        yield here + suffix
            elif level + 1 < depth:
                yield from rec(here, m)

    yield from rec((), -1)


def count_regular(
    stab_words: np.ndarray, depth: int, lo: int = 0, hi: int | None = None
) -> tuple[int, int]:
    masks = masks_from_words(stab_words)
    return count_regular_masks(masks, stab_words.shape[0], depth, lo, hi)


def find_first_regular(stab_words: np.ndarray, depth: int):
    masks = masks_from_words(stab_words)
    return find_first_regular_masks(masks, stab_words.shape[0], depth)
