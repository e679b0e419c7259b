"""Wreath products, asymmetric partitions, and regular-point lifting.

Two views of a wreath product appear here.  ``wreath_product`` builds the
imprimitive permutation group on m*n points (blocks of size m permuted by the
top group); it backs the catalog.  ``WreathSpace`` models the product action
on tuples of base points: the big group (base image)^n : top acting on the
mixed-radix product of n copies of a base coset space.  Regularity and
same-orbit questions on the product are decided *structurally* -- per top
element and per block -- so they stay exact even when the wreath group itself
is far beyond enumeration range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from . import engine
from .cosets import CosetSpace
from .errors import BudgetError, HypothesisError
from .perm import GeneratedGroup, Permutation, identity_images
from .structure import derived_series

MAX_CELLS = 5


def wreath_product(inner: GeneratedGroup, outer: GeneratedGroup) -> GeneratedGroup:
    """Imprimitive wreath product on inner.degree * outer.degree points.

    Blocks are consecutive runs of inner.degree points.  Inner generators are
    installed in one block per orbit of the outer group (conjugation by top
    elements reaches the rest), so the order identity |inner|^n * |outer|
    holds for intransitive tops as well.
    """
    m, n = inner.degree, outer.degree
    degree = m * n
    gens: list[Permutation] = []
    seen_blocks: set[int] = set()
    for b in range(n):
        if b in seen_blocks:
            continue
        seen_blocks |= outer.orbit(b)
        off = b * m
        for g in inner.generators:
            images = list(range(degree))
            for i, x in enumerate(g.images):
                images[off + i] = off + x
            gens.append(Permutation(images))
    for h in outer.generators:
        images = [0] * degree
        for blk in range(n):
            for r in range(m):
                images[blk * m + r] = h.images[blk] * m + r
        gens.append(Permutation(images))
    if not gens:
        gens = [Permutation.identity(degree)]
    name = None
    if inner.name and outer.name:
        name = f"wreath({inner.name},{outer.name})"
    return GeneratedGroup(degree, gens, enum_cap=inner.enum_cap, name=name)


@dataclass(frozen=True)
class PartitionColoring:
    """Assignment of each point to a cell; cells are labeled 0..cell_count-1
    in order of first appearance."""

    degree: int
    cell_of: tuple[int, ...]

    @property
    def cell_count(self) -> int:
        return max(self.cell_of) + 1

    def cells(self) -> list[list[int]]:
        """Cells as 1-based point lists."""
        out: list[list[int]] = [[] for _ in range(self.cell_count)]
        for p, c in enumerate(self.cell_of):
            out[c].append(p + 1)
        return out

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "cell_count": self.cell_count,
            "cells": self.cells(),
        }


def _canonical_coloring(cell_of) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in cell_of:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def _asym_checker(group: GeneratedGroup):
    """Exact vectorized test over the full element set: an element fixes the
    partition iff it maps each cell into itself, i.e. preserves the coloring."""
    rows = [img for img in group.element_images if img != identity_images(group.degree)]
    if not rows:
        return lambda coloring: True
    E = np.array(rows, dtype=np.int32)

    def check(coloring) -> bool:
        c = np.asarray(coloring, dtype=np.int32)
        return not bool(np.any(np.all(c[E] == c[None, :], axis=1)))

    return check


def is_asymmetric(group: GeneratedGroup, cell_of) -> bool:
    """Exact check: only the identity maps every cell into itself."""
    return _asym_checker(group)(cell_of)


def _iter_colorings(n: int, m: int):
    """Canonical colorings of n points with exactly m cells, lex order.

    Canonical means restricted growth: cell labels appear in first-use order,
    so each set partition is enumerated exactly once.
    """
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            if mx == m - 1:
                yield tuple(a)
            return
        if (m - 1 - mx) > (n - i):
            return  # cannot introduce the missing cells anymore
        top = min(mx + 1, m - 1)
        for c in range(top + 1):
            a[i] = c
            yield from rec(i + 1, max(mx, c))

    yield from rec(0, -1)


def minimal_asymmetric_cells(group: GeneratedGroup, max_cells: int = None) -> int | None:
    """Exhaustively determined minimal cell count, or None if none exists
    within max_cells.  Intended for small degrees."""
    limit = max_cells if max_cells is not None else group.degree
    check = _asym_checker(group)
    for m in range(1, min(limit, group.degree) + 1):
        for coloring in _iter_colorings(group.degree, m):
            if check(coloring):
                return m
    return None


def asymmetric_partition(
    group: GeneratedGroup,
    exhaustive_limit: int = 12,
    samples: int = 20000,
    seed: int = 0,
) -> PartitionColoring:
    """A verified partition with at most five cells fixed only by the identity.

    Requires a solvable group (that is what guarantees existence).  Strategy:
    exhaustive search in (cell count, lex) order up to ``exhaustive_limit``
    points, so the returned cell count is minimal there; beyond that,
    seeded random colorings with exact verification, then a deterministic
    merge-down from the all-singletons partition.  Never returns an
    unverified coloring; raises BudgetError if no certificate is found.
    """
    if not derived_series(group).solvable:
        raise HypothesisError("asymmetric partitions are guaranteed only for solvable groups")
    n = group.degree
    group._materialize()
    if group.order == 1:
        return PartitionColoring(n, tuple([0] * n))
    check = _asym_checker(group)
    if n <= exhaustive_limit:
        for m in range(1, min(MAX_CELLS, n) + 1):
            for coloring in _iter_colorings(n, m):
                if check(coloring):
                    return PartitionColoring(n, coloring)
        raise BudgetError(
            f"exhausted all partitions with <= {MAX_CELLS} cells without a certificate"
        )
    rng = random.Random(seed)
    for _ in range(samples):
        coloring = tuple(rng.randrange(MAX_CELLS) for _ in range(n))
        if check(coloring):
            return PartitionColoring(n, _canonical_coloring(coloring))
    # deterministic fallback: start from singletons and merge while asymmetric
    cell_of = list(range(n))
    count = n
    merged = True
    while count > MAX_CELLS and merged:
        merged = False
        labels = sorted(set(cell_of))
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                trial = [a if c == b else c for c in cell_of]
                if check(trial):
                    cell_of = trial
                    count -= 1
                    merged = True
                    break
            if merged:
                break
    if count > MAX_CELLS:
        raise BudgetError(
            "randomized search and singleton merging found no "
            f"asymmetric partition with <= {MAX_CELLS} cells"
        )
    return PartitionColoring(n, _canonical_coloring(cell_of))


class WreathSpace:
    """Product action of (base image) wr top on tuples of base points.

    Product points are mixed-radix integers over n digits in [0, m): block 0
    is the most significant digit.  ``block_moves[t]`` is a top element
    sending block 0 to block t (identity for t = 0; None when the top orbit
    does not reach t).
    """

    def __init__(self, base_space: CosetSpace, top: GeneratedGroup):
        if not base_space.is_faithful():
            raise HypothesisError("wreath lifting requires a faithful base action")
        if not derived_series(top).solvable:
            raise HypothesisError("the top group must be solvable")
        self.base = base_space
        self.top = top
        self.n = top.degree
        self.m = base_space.size
        self.block_moves = self._block_moves()

    def _block_moves(self) -> list[Permutation | None]:
        n = self.n
        moves: list[Permutation | None] = [None] * n
        moves[0] = self.top.identity
        frontier = [0]
        gens = self.top.generators
        while frontier:
            nxt = []
            for b in frontier:
                for g in gens:
                    c = g.images[b]
                    if moves[c] is None:
                        moves[c] = moves[b] * g
                        nxt.append(c)
            frontier = nxt
        return moves

    @property
    def product_size(self) -> int:
        return self.m**self.n

    @property
    def order(self) -> int:
        return self.base.image_order**self.n * self.top.order

    def digits(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            index, d = divmod(index, self.m)
            out.append(d)
        return tuple(reversed(out))

    def index(self, digits) -> int:
        idx = 0
        for d in digits:
            idx = idx * self.m + d
        return idx

    def block_tuples(self, tup) -> list[tuple[int, ...]]:
        """Per-block base tuples of a product-point tuple."""
        digit_rows = [self.digits(p) for p in tup]
        return [tuple(row[t] for row in digit_rows) for t in range(self.n)]

    # -- structured decisions (no wreath enumeration) ----------------------

    def structured_regularity_check(self, tup) -> bool:
        """Whether no non-identity wreath element fixes the tuple.

        An element (g_1..g_n; h) fixes it iff every block tuple maps onto the
        h-shifted block tuple under some base element; blocks are independent,
        so the test runs per top candidate and per block.
        """
        if len(tup) == 0:
            return self.order == 1
        blocks = self.block_tuples(tup)
        for b in blocks:
            if not engine.is_regular_tuple(self.base, b):
                return False
        ident = identity_images(self.n)
        for h in self.top.element_images:
            if h == ident:
                continue
            if all(
                engine.same_orbit(self.base, blocks[i], blocks[h[i]])
                for i in range(self.n)
            ):
                return False
        return True

    def structured_same_orbit(self, t1, t2) -> bool:
        """Whether two product-point tuples lie in one wreath-group orbit."""
        if len(t1) != len(t2):
            return False
        b1 = self.block_tuples(t1)
        b2 = self.block_tuples(t2)
        for h in self.top.element_images:
            if all(
                engine.same_orbit(self.base, b1[i], b2[h[i]]) for i in range(self.n)
            ):
                return True
        return False

    # -- enumerable route (test oracle) ------------------------------------

    def product_group(self, max_points: int = 10**6) -> GeneratedGroup:
        """The wreath group as permutations of the product points.

        Only for enumerable cross-checks; the structured route is the
        designated method beyond that.
        """
        size = self.product_size
        if size > max_points:
            raise BudgetError(f"product point set of size {size} exceeds {max_points}")
        idx = np.arange(size, dtype=np.int64)
        place = [self.m ** (self.n - 1 - t) for t in range(self.n)]
        gens: list[Permutation] = []
        seen_blocks: set[int] = set()
        gen_rows = [
            np.ascontiguousarray(self.base.gen_action[:, gi]).astype(np.int64)
            for gi in range(self.base.gen_action.shape[1])
        ]
        for b in range(self.n):
            if b in seen_blocks:
                continue
            seen_blocks |= self.top.orbit(b)
            d = (idx // place[b]) % self.m
            for row in gen_rows:
                images = idx + (row[d] - d) * place[b]
                gens.append(Permutation._wrap(tuple(int(x) for x in images)))
        digit_cols = [(idx // place[t]) % self.m for t in range(self.n)]
        for h in self.top.generators:
            hinv = h.inverse().images
            images = sum(digit_cols[hinv[j]] * place[j] for j in range(self.n))
            gens.append(Permutation._wrap(tuple(int(x) for x in images)))
        if not gens:
            gens = [Permutation.identity(size)]
        return GeneratedGroup(size, gens, enum_cap=self.base.group.enum_cap)

    def __repr__(self) -> str:
        return (
            f"WreathSpace(base_points={self.m}, copies={self.n}, "
            f"order={self.order})"
        )


def _validate_lift_inputs(w: WreathSpace, reps, partition: PartitionColoring):
    if not reps:
        raise ValueError("at least one base representative is required")
    k = len(reps[0])
    if any(len(r) != k for r in reps):
        raise ValueError("representatives must share one tuple length")
    if partition.degree != w.n:
        raise ValueError("partition degree must match the number of blocks")
    if partition.cell_count > len(reps):
        raise HypothesisError(
            f"{partition.cell_count} cells need at least that many distinct "
            f"regular orbits; got {len(reps)}"
        )
    if not is_asymmetric(w.top, partition.cell_of):
        raise HypothesisError("partition is not asymmetric for the top group")
    for i, r in enumerate(reps):
        if not engine.is_regular_tuple(w.base, r):
            raise HypothesisError(f"representative {i} is not regular in the base action")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if engine.same_orbit(w.base, reps[i], reps[j]):
                raise HypothesisError(
                    f"representatives {i} and {j} lie in the same base orbit"
                )
    return k


def _assemble(w: WreathSpace, reps, assignment, k: int) -> tuple[int, ...]:
    return tuple(
        w.index([reps[assignment[t]][c] for t in range(w.n)]) for c in range(k)
    )


def lift_regular_point(w: WreathSpace, reps, partition: PartitionColoring):
    """Assemble one wreath-regular tuple from base representatives.

    Block t receives the representative indexed by its cell, so two blocks
    share a representative exactly when they share a cell.  The result is
    certified by the structured check; a certification failure would mean an
    implementation bug and is raised, never swallowed.
    """
    k = _validate_lift_inputs(w, reps, partition)
    assignment = list(partition.cell_of)
    lifted = _assemble(w, reps, assignment, k)
    if not w.structured_regularity_check(lifted):
        raise RuntimeError("internal error: lifted tuple failed its regularity certificate")
    return lifted


def distinct_regular_lifts(w: WreathSpace, reps, partition: PartitionColoring):
    """len(reps) certified wreath-regular tuples in pairwise distinct orbits.

    With more than five orbit representatives the cell-to-representative
    assignments are cyclic windows (the i-th lift never uses representative
    i), which forces distinct used-sets and hence distinct orbits.  With
    exactly five, injections of cells into representatives are classified
    under the top-induced cell moves and five inequivalent ones are taken.
    Every output is re-certified structurally; failures raise.
    """
    if w.n == 1:
        k = _validate_lift_inputs(w, reps, partition)
        return [tuple(w.index([r[c]]) for c in range(k)) for r in reps]
    s = len(reps)
    if s < 5:
        raise HypothesisError("the distinct-lift construction needs at least five orbits")
    k = _validate_lift_inputs(w, reps, partition)
    m_cells = partition.cell_count
    cell_of = partition.cell_of
    assignments: list[list[int]] = []
    if s > 5:
        for i in range(s):
            assignments.append([(i + 1 + c) % s for c in range(m_cells)])
    else:
        kept: list[tuple[int, ...]] = []
        tops = w.top.element_images
        for sigma in permutations(range(5), m_cells):
            equivalent = False
            for tau in kept:
                for h in tops:
                    if all(
                        sigma[cell_of[t]] == tau[cell_of[h[t]]] for t in range(w.n)
                    ):
                        equivalent = True
                        break
                if equivalent:
                    break
            if not equivalent:
                kept.append(sigma)
                if len(kept) == 5:
                    break
        if len(kept) < 5:
            raise RuntimeError(
                "internal error: fewer than five inequivalent assignments found"
            )
        assignments = [[sig[c] for c in range(m_cells)] for sig in kept]
    lifts = []
    for assign in assignments:
        full = [assign[cell_of[t]] for t in range(w.n)]
        lifted = _assemble(w, reps, full, k)
        if not w.structured_regularity_check(lifted):
            raise RuntimeError("internal error: lift failed its regularity certificate")
        lifts.append(lifted)
    for i in range(len(lifts)):
        for j in range(i + 1, len(lifts)):
            if w.structured_same_orbit(lifts[i], lifts[j]):
                raise RuntimeError(
                    f"internal error: lifts {i} and {j} landed in one orbit"
                )
    return lifts
