"""Base sizes and regular-orbit counts of transitive actions.

The workhorse is the first-coordinate reduction: a k-tuple with first
coordinate fixed at point 0 is regular for the (faithful image of the) group
iff its tail is regular for the point-0 stabilizer, and distinct regular
orbits correspond to distinct stabilizer-orbits of tails.  Tails are scanned
over the FULL point set: for k above the base size a regular tuple may repeat
coordinates, so restricting tails away from the base point would undercount.
The direct whole-tuple scan stays available as an independent cross-check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _scan_py, scan
from .cosets import CosetSpace
from .errors import BudgetError, HypothesisError
from .perm import GeneratedGroup, Permutation, format_cycles
from .structure import derived_series, right_transversal

DEFAULT_SCAN_BUDGET = 10**8
DEFAULT_REP_CAP = 20
_REP_MARK_LIMIT = 1 << 25  # tail spaces up to ~33M points get exact orbit marking
_REP_WALK_BUDGET = 10**6


@dataclass
class RegularOrbitReport:
    """Outcome of a base-size or regular-orbit computation."""

    k: int
    base_size: int | None
    reg_count: int | None
    representatives: list[tuple[int, ...]]
    method: str
    elapsed_ms: float
    budget_used: int
    representatives_complete: bool = True
    trivial_action: bool = False

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "base_size": self.base_size,
            "reg_count": self.reg_count,
            "representatives": [[p + 1 for p in t] for t in self.representatives],
            "method": self.method,
            "elapsed_ms": self.elapsed_ms,
            "budget_used": self.budget_used,
            "representatives_complete": self.representatives_complete,
            "trivial_action": self.trivial_action,
        }


def lower_bound(index: int, subgroup_order_mod_core: int) -> int:
    """Smallest k with index**(k-1) > |H/H_G|, in exact integer arithmetic.

    For |H/H_G| <= 1 the action is regular and the bound is 1 (the inequality
    derivation assumes k > 1 and would otherwise overshoot the true base).
    """
    if index < 2:
        raise ValueError("lower_bound requires index >= 2")
    if subgroup_order_mod_core <= 1:
        return 1
    k = 2
    power = index
    while power <= subgroup_order_mod_core:
        power *= index
        k += 1
    return k


def _method_tag(core: str, threads: int) -> str:
    return f"{core}[{scan.backend_name()},threads={threads}]"


def is_regular_tuple(space: CosetSpace, t) -> bool:
    """True iff no non-identity image element fixes every coordinate.

    Iterated intersection of point stabilizers with early exit once only the
    identity survives.  The empty tuple is regular only for the trivial image.
    """
    masks = space.group_masks()
    mask = -1
    for p in t:
        mask &= masks[p]
        if mask == 1:
            return True
    if not t:
        return space.image_order == 1
    return mask == 1


def same_orbit(space: CosetSpace, t1, t2) -> bool:
    """Whether two point tuples lie in the same image-group orbit."""
    t1 = tuple(t1)
    t2 = tuple(t2)
    if len(t1) != len(t2):
        return False
    if not t1:
        return True
    rows = space.image_pi[:, t1]
    return bool(np.any(np.all(rows == np.array(t2, dtype=np.int32), axis=1)))


def _check_budget(size: int, depth: int, budget: int) -> int:
    cost = size**depth
    if cost > budget:
        raise BudgetError(
            f"scan of {size}^{depth} = {cost} tuples exceeds budget {budget}",
            partial=cost,
        )
    if cost >= 1 << 62:
        raise BudgetError("tuple space too large for 64-bit counting")
    return cost


def _collect_representatives(
    space: CosetSpace, depth: int, n_orbits: int, cap: int
) -> tuple[list[tuple[int, ...]], bool]:
    """Lexicographically least tail per stabilizer-orbit, up to cap orbits."""
    target = min(cap, n_orbits)
    if target == 0:
        return [], True
    size = space.size
    masks = space.h_masks()
    h_pi = space.h_pi
    powers = size ** np.arange(depth - 1, -1, -1, dtype=np.int64)
    tail_space = size**depth
    reps: list[tuple[int, ...]] = []
    if tail_space <= _REP_MARK_LIMIT:
        seen = np.zeros(tail_space, dtype=bool)
        for tail in _scan_py.iter_regular_masks(masks, size, depth):
            ti = int(np.dot(np.array(tail, dtype=np.int64), powers))
            if seen[ti]:
                continue
            reps.append((0,) + tail)
            orbit_idx = h_pi[:, tail].astype(np.int64) @ powers
            seen[orbit_idx] = True
            if len(reps) == target:
                break
        return reps, True
    # big tail space: lexmin test per regular tail, bounded walk
    visited = 0
    arr_t: np.ndarray
    for tail in _scan_py.iter_regular_masks(masks, size, depth):
        visited += 1
        if visited > _REP_WALK_BUDGET:
            return reps, False
        arr_t = np.array(tail, dtype=np.int32)
        images = h_pi[:, tail]
        alive = np.ones(images.shape[0], dtype=bool)
        is_min = True
        for c in range(depth):
            col = images[alive, c]
            if np.any(col < arr_t[c]):
                is_min = False
                break
            alive[alive] = col == arr_t[c]
            if not alive.any():
                break
        if is_min:
            reps.append((0,) + tail)
            if len(reps) == target:
                break
    return reps, True


def reg_count(
    space: CosetSpace,
    k: int,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    rep_cap: int = DEFAULT_REP_CAP,
    threads: int = 1,
) -> RegularOrbitReport:
    """Number of regular orbits on k-tuples, with canonical representatives.

    Counts stabilizer-regular (k-1)-tuples over the full point set and divides
    by the stabilizer order; representatives are the lexicographically least
    tuple of each regular orbit (they always start at point 0).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t0 = time.perf_counter()
    n_h = space.h_order
    if k == 1:
        count = 1 if n_h == 1 else 0
        reps = [(0,)] if count else []
        return RegularOrbitReport(
            k=1,
            base_size=None,
            reg_count=count,
            representatives=reps,
            method=_method_tag("stabilizer-reduction", threads),
            elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
            budget_used=1,
        )
    depth = k - 1
    _check_budget(space.size, depth, scan_budget)
    count, nodes = scan.count_regular(space.stab_words_h, depth, threads=threads)
    if count % n_h:
        raise RuntimeError("regular tail count not divisible by stabilizer order")
    n_orbits = count // n_h
    reps, complete = ([], True)
    if rep_cap > 0 and n_orbits > 0:
        reps, complete = _collect_representatives(space, depth, n_orbits, rep_cap)
    return RegularOrbitReport(
        k=k,
        base_size=None,
        reg_count=n_orbits,
        representatives=reps,
        method=_method_tag("stabilizer-reduction", threads),
        elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
        budget_used=nodes,
        representatives_complete=complete,
    )


def reg_count_direct(
    space: CosetSpace,
    k: int,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    threads: int = 1,
) -> int:
    """Regular-orbit count by scanning whole k-tuples; the cross-check route."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_budget(space.size, k, scan_budget)
    count, _ = scan.count_regular(space.stab_words_group, k, threads=threads)
    n = space.image_order
    if count % n:
        raise RuntimeError("regular point count not divisible by group order")
    return count // n


def base_size(
    space: CosetSpace,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    threads: int = 1,
) -> RegularOrbitReport:
    """Minimal k admitting a regular k-tuple, plus the canonical witness.

    Starts at the index lower bound and increases k, deciding existence via
    the stabilizer reduction.  The witness is the lexicographically least
    regular tuple (its first coordinate is always point 0).
    """
    t0 = time.perf_counter()
    if space.image_order == 1:
        return RegularOrbitReport(
            k=0,
            base_size=0,
            reg_count=None,
            representatives=[],
            method="trivial-action",
            elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
            budget_used=0,
            trivial_action=True,
        )
    n_h = space.h_order
    nodes_total = 0
    start = lower_bound(space.size, n_h)
    for k in range(start, space.size + 2):
        if k == 1:
            if n_h == 1:
                return RegularOrbitReport(
                    k=1,
                    base_size=1,
                    reg_count=None,
                    representatives=[(0,)],
                    method=_method_tag("stabilizer-reduction", threads),
                    elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
                    budget_used=0,
                )
            continue
        depth = k - 1
        _check_budget(space.size, depth, scan_budget)
        tail = scan.find_first_regular(space.stab_words_h, depth)
        nodes_total += space.size**depth  # upper bound; existence scans early-exit
        if tail is not None:
            return RegularOrbitReport(
                k=k,
                base_size=k,
                reg_count=None,
                representatives=[(0,) + tuple(tail)],
                method=_method_tag("stabilizer-reduction", threads),
                elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
                budget_used=nodes_total,
            )
    raise RuntimeError("no regular tuple up to k = |points|+1; impossible for faithful actions")


def burnside_orbit_count(space: CosetSpace, k: int) -> int:
    """Total orbit count on k-tuples via the average number of fixed tuples."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = space.image_order
    total = sum(int(f) ** k for f in space.fix_counts())
    if total % n:
        raise RuntimeError("fixed-tuple sum not divisible by group order")
    return total // n


def orbit_count_by_reduction(space: CosetSpace, k: int) -> int:
    """Total orbit count on k-tuples via stabilizer orbits on (k-1)-tails."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n_h = space.h_order
    total = sum(int(f) ** (k - 1) for f in space.fix_counts_h())
    if total % n_h:
        raise RuntimeError("fixed-tail sum not divisible by stabilizer order")
    return total // n_h


def base_by_intersections(
    group: GeneratedGroup, sub: GeneratedGroup, k: int
) -> list[Permutation] | None:
    """Witnesses x_1..x_k with the conjugate intersection equal to the core.

    Greedy descent on intersection size with full backtracking over distinct
    conjugates (the first factor is pinned to the subgroup itself, which is
    harmless: conjugating a witness normalizes the first factor).  Returns
    None when no k conjugates meet in the core; that is a definite answer,
    the search is exhaustive.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    group._materialize()
    trans = right_transversal(group, sub)
    index_of = {img: i for i, img in enumerate(group.element_images)}
    n = group.order

    def conj_bits(t: Permutation) -> int:
        tinv = t.inverse()
        bits = 0
        for x in sub.elements:
            bits |= 1 << index_of[(tinv * x * t).images]
        return bits

    all_bits = [conj_bits(t) for t in trans]
    # distinct conjugates only; remember one transversal element per conjugate
    seen: dict[int, Permutation] = {}
    for t, b in zip(trans, all_bits):
        seen.setdefault(b, t)
    conjs = list(seen.keys())
    reps = [seen[b] for b in conjs]
    core_bits = conjs[0]
    for b in conjs[1:]:
        core_bits &= b

    found: list[int] | None = None

    def dfs(chosen: list[int], current: int):
        nonlocal found
        if found is not None:
            return
        if current == core_bits:
            found = list(chosen)
            return
        if len(chosen) == k:
            return
        last = chosen[-1]
        cands = []
        for j in range(last + 1, len(conjs)):
            inter = current & conjs[j]
            cands.append((inter.bit_count(), j, inter))
        cands.sort(key=lambda c: (c[0], c[1]))
        for _, j, inter in cands:
            chosen.append(j)
            dfs(chosen, inter)
            chosen.pop()
            if found is not None:
                return

    dfs([0], conjs[0])
    if found is None:
        return None
    witnesses = [reps[j] for j in found]
    while len(witnesses) < k:
        witnesses.append(group.identity)  # repeating a factor keeps the meet
    return witnesses


def reg_floor_check(
    space: CosetSpace,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    threads: int = 1,
) -> tuple[bool, dict]:
    """For solvable point stabilizers: k = max(base, 6) gives >= 5 regular orbits.

    Raises HypothesisError for non-solvable stabilizers so the violation is
    reported distinctly from a failed check.
    """
    stab_rows = space.h_pi
    stab_group = GeneratedGroup.from_elements(
        space.size, [tuple(int(x) for x in row) for row in stab_rows]
    )
    if not derived_series(stab_group).solvable:
        raise HypothesisError("point stabilizer is not solvable")
    base_report = base_size(space, scan_budget=scan_budget, threads=threads)
    k = max(base_report.base_size, 6)
    count_report = reg_count(
        space, k, scan_budget=scan_budget, rep_cap=0, threads=threads
    )
    ok = count_report.reg_count >= 5
    return ok, {
        "base_size": base_report.base_size,
        "k": k,
        "reg_count": count_report.reg_count,
        "passes": ok,
    }


def epsilon_bounds(
    size: int, image_order: int, k: int, reg_orbits: int
) -> tuple[Fraction, Fraction]:
    """(exact hit probability, weaker index-only bound) for random k-tuples."""
    exact = Fraction(reg_orbits * image_order, size**k)
    weak = Fraction(reg_orbits, size ** (k - 1))
    return exact, weak


def witness_cycles(witnesses: list[Permutation]) -> list[str]:
    return [format_cycles(w) for w in witnesses]
