"""Structural analysis of enumerable groups.

Solvability via derived series, solvable radicals, cores, normalizers,
maximal-solvable testing, and a small normal-subgroup scan used by the
property tests.  Everything here is exact: groups are fully enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import HypothesisError
from .perm import (
    GeneratedGroup,
    Permutation,
    close_elements,
    compose_images,
    identity_images,
    invert_images,
)


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup together with the parent group it lives in."""

    parent: GeneratedGroup
    group: GeneratedGroup

    def __post_init__(self):
        if self.parent.degree != self.group.degree:
            raise ValueError("subgroup and parent must share a degree")
        if not self.parent.contains_subgroup(self.group):
            raise ValueError("generators do not lie in the parent group")

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def index(self) -> int:
        return self.parent.order // self.group.order


def subgroup(parent: GeneratedGroup, generators: Sequence[Permutation]) -> SubgroupHandle:
    gens = list(generators) or [parent.identity]
    return SubgroupHandle(parent, GeneratedGroup(parent.degree, gens))


@dataclass
class DerivedSeriesReport:
    """Derived series G = G0 >= G1 >= ... down to the stable term."""

    terms: list[GeneratedGroup]
    solvable: bool


def _conj(x: tuple[int, ...], g: tuple[int, ...], ginv: tuple[int, ...]) -> tuple[int, ...]:
    # x^g = g^-1 x g under the right-action convention
    return compose_images(compose_images(ginv, x), g)


def _normal_closure_images(
    degree: int,
    parent_gens: Sequence[tuple[int, ...]],
    seeds: Sequence[tuple[int, ...]],
    cap: int,
) -> list[tuple[int, ...]]:
    """Element list of the normal closure of <seeds> in <parent_gens>."""
    ident = identity_images(degree)
    gens = [s for s in dict.fromkeys(seeds) if s != ident]
    if not gens:
        return [ident]
    parent_pairs = [(g, invert_images(g)) for g in parent_gens]
    while True:
        elems, index, _ = close_elements(degree, gens, cap=cap)
        new = []
        for x in gens:
            for g, ginv in parent_pairs:
                y = _conj(x, g, ginv)
                if y not in index:
                    new.append(y)
        if not new:
            return elems
        gens.extend(dict.fromkeys(new))


def normal_closure(parent: GeneratedGroup, seeds: Sequence[Permutation]) -> GeneratedGroup:
    """Smallest normal subgroup of parent containing the seed elements."""
    elems = _normal_closure_images(
        parent.degree,
        [g.images for g in parent.generators],
        [s.images for s in seeds],
        cap=parent.enum_cap,
    )
    return GeneratedGroup.from_elements(parent.degree, elems)


def _commutator_images(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return compose_images(
        compose_images(compose_images(invert_images(a), invert_images(b)), a), b
    )


def derived_series(g: GeneratedGroup) -> DerivedSeriesReport:
    """Compute G >= G' >= G'' >= ... until the terms stabilize."""
    terms = [g]
    current = g
    while True:
        gens = [x.images for x in current.generators]
        seeds = [
            _commutator_images(a, b) for a, b in combinations(gens, 2)
        ] or [identity_images(g.degree)]
        elems = _normal_closure_images(g.degree, gens, seeds, cap=g.enum_cap)
        derived = GeneratedGroup.from_elements(g.degree, elems)
        if derived.order == current.order:
            return DerivedSeriesReport(terms, solvable=current.order == 1)
        terms.append(derived)
        current = derived
        if current.order == 1:
            return DerivedSeriesReport(terms, solvable=True)


def is_solvable(g: GeneratedGroup | SubgroupHandle) -> bool:
    group = g.group if isinstance(g, SubgroupHandle) else g
    return derived_series(group).solvable


def right_transversal(parent: GeneratedGroup, sub: GeneratedGroup) -> list[Permutation]:
    """Right-coset representatives of sub in parent, breadth-first, identity first."""
    sub_set = set(sub.element_images)
    gens = [g.images for g in parent.generators]
    reps: list[tuple[int, ...]] = [identity_images(parent.degree)]
    frontier = [0]
    while frontier:
        nxt = []
        for ri in frontier:
            for gen in gens:
                cand = compose_images(reps[ri], gen)
                cand_inv = invert_images(cand)
                # H*cand equals H*reps[j] iff reps[j] * cand^-1 lies in H
                if not any(
                    compose_images(r, cand_inv) in sub_set for r in reps
                ):
                    reps.append(cand)
                    nxt.append(len(reps) - 1)
        frontier = nxt
    return [Permutation._wrap(r) for r in reps]


def core(h: SubgroupHandle) -> SubgroupHandle:
    """Intersection of all parent-conjugates of h (its normal core).

    Conjugating by a right transversal of h suffices since h-multiples give
    the same conjugate.
    """
    parent = h.parent
    h_set = set(h.group.element_images)
    trans = right_transversal(parent, h.group)
    kept = []
    for x in h.group.element_images:
        ok = True
        for t in trans:
            # x lies in h^t iff t x t^-1 lies in h
            if compose_images(compose_images(t.images, x), invert_images(t.images)) not in h_set:
                ok = False
                break
        if ok:
            kept.append(x)
    return SubgroupHandle(parent, GeneratedGroup.from_elements(parent.degree, kept))


def normalizer(h: SubgroupHandle, within: SubgroupHandle | None = None) -> SubgroupHandle:
    """{x in within : h^x = h}; within defaults to the parent group."""
    parent = h.parent
    scope = within.group if within is not None else parent
    h_set = set(h.group.element_images)
    h_gens = [g.images for g in h.group.generators]
    kept = []
    for x in scope.element_images:
        xinv = invert_images(x)
        if all(compose_images(compose_images(xinv, s), x) in h_set for s in h_gens):
            kept.append(x)
    return SubgroupHandle(parent, GeneratedGroup.from_elements(parent.degree, kept))


def solvable_radical(g: GeneratedGroup) -> SubgroupHandle:
    """Largest normal solvable subgroup, as a fixed-point join of solvable
    normal closures of conjugacy-class representatives."""
    degree = g.degree
    parent_gens = [x.images for x in g.generators]
    reps = [r.images for r in g.conjugacy_class_reps()]
    closure_cache: dict[tuple[int, ...], tuple[frozenset, bool]] = {}
    radical = {identity_images(degree)}
    changed = True
    while changed:
        changed = False
        for x in reps:
            if x in radical:
                continue
            if x in closure_cache:
                elems_set, solv = closure_cache[x]
            else:
                elems = _normal_closure_images(degree, parent_gens, [x], cap=g.enum_cap)
                grp = GeneratedGroup.from_elements(degree, elems)
                solv = derived_series(grp).solvable
                elems_set = frozenset(elems)
                closure_cache[x] = (elems_set, solv)
            if solv and not elems_set <= radical:
                joined, _, _ = close_elements(
                    degree, list(radical | elems_set), cap=g.enum_cap
                )
                radical = set(joined)
                changed = True
    result = GeneratedGroup.from_elements(degree, radical)
    return SubgroupHandle(g, result)


def is_maximal_solvable(s: SubgroupHandle) -> bool:
    """True iff s is solvable and every strictly larger subgroup <s, x> is not.

    Iterates x over right-coset representatives of s (adding s-multiples of x
    generates the same overgroup).  Raises HypothesisError when s is not
    solvable.
    """
    if not is_solvable(s.group):
        raise HypothesisError("is_maximal_solvable requires a solvable subgroup")
    parent = s.parent
    if s.order == parent.order:
        return True
    parent_solvable = derived_series(parent).solvable
    if parent_solvable:
        return False
    s_images = s.group.element_images
    s_gens = [g.images for g in s.group.generators]
    seen_overgroups: dict[frozenset, bool] = {}
    for t in right_transversal(parent, s.group):
        if t.is_identity():
            continue
        elems, _, _ = close_elements(
            parent.degree,
            s_gens + [t.images],
            cap=parent.enum_cap,
            seed_images=s_images,
        )
        if len(elems) == parent.order:
            continue  # parent itself is known non-solvable here
        key = frozenset(elems)
        if key not in seen_overgroups:
            grp = GeneratedGroup.from_elements(parent.degree, elems)
            seen_overgroups[key] = derived_series(grp).solvable
        if seen_overgroups[key]:
            return False
    return True


def normal_subgroups(g: GeneratedGroup, max_order: int = 20000) -> list[GeneratedGroup]:
    """All normal subgroups obtained as normal closures of <= 2 class reps.

    A brute-force scan for property tests on desk-scale groups; sufficient for
    the catalog instances exercised here.
    """
    if g.order > max_order:
        raise ValueError(f"normal-subgroup scan limited to |G| <= {max_order}")
    degree = g.degree
    parent_gens = [x.images for x in g.generators]
    reps = [r.images for r in g.conjugacy_class_reps()]
    found: dict[frozenset, GeneratedGroup] = {}

    def add(elems: list[tuple[int, ...]]):
        key = frozenset(elems)
        if key not in found:
            found[key] = GeneratedGroup.from_elements(degree, elems)

    add([identity_images(degree)])
    singles = {}
    for x in reps:
        elems = _normal_closure_images(degree, parent_gens, [x], cap=g.enum_cap)
        singles[x] = elems
        add(elems)
    for x, y in combinations(reps, 2):
        if set(singles[y]) <= set(singles[x]) or set(singles[x]) <= set(singles[y]):
            continue
        add(_normal_closure_images(degree, parent_gens, [x, y], cap=g.enum_cap))
    add(g.element_images)
    return sorted(found.values(), key=lambda n: (n.order, n.element_images))
