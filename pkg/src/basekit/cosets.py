"""Transitive actions: right-coset spaces and natural point actions.

A CosetSpace carries the permutation representation of an enumerable group G
on the right cosets of a subgroup H (or on its natural points), the faithful
image of that representation, and per-point stabilizer bitsets consumed by
the tuple-scan engine.  The kernel of the representation is the core of H,
so base/regular-orbit questions are always answered for G modulo that core.
"""

from __future__ import annotations

import sys

import numpy as np

from .perm import GeneratedGroup, Permutation, compose_images, invert_images

if sys.byteorder != "little":  # pragma: no cover - packing assumes LE words
    raise ImportError("basekit's bitset packing requires a little-endian platform")


def pack_rows(bool_rows: np.ndarray) -> np.ndarray:
    """Pack boolean rows into uint64 words, bit j of word w = column 64*w+j."""
    rows = np.ascontiguousarray(bool_rows, dtype=np.uint8)
    packed = np.packbits(rows, axis=1, bitorder="little")
    n_bytes = packed.shape[1]
    pad = (-n_bytes) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    return packed.view(np.uint64)


class CosetSpace:
    """A transitive action of an enumerable group, ready for tuple scans.

    Built either from a subgroup (action on right cosets, points indexed in
    BFS-discovery order from the trivial coset) or from a transitive natural
    action (points keep their labels).  Immutable after construction; the
    derived tables are materialized lazily and cached.
    """

    def __init__(self, group, subgroup, points, size, gen_action, kind):
        self.group: GeneratedGroup = group
        self.subgroup: GeneratedGroup | None = subgroup
        self.points: list[Permutation] | None = points
        self.size: int = size
        self.gen_action: np.ndarray = gen_action
        self.kind: str = kind
        self._pi = None
        self._orig_to_image = None
        self._image_pi = None
        self._h_indices = None
        self._stab_words_g = None
        self._stab_words_h = None
        self._g_masks = None
        self._h_masks = None

    # -- construction -----------------------------------------------------

    @classmethod
    def build(cls, group: GeneratedGroup, sub: GeneratedGroup) -> "CosetSpace":
        """Action of group on the right cosets of sub."""
        if group.degree != sub.degree:
            raise ValueError("group and subgroup must share a degree")
        if not group.contains_subgroup(sub):
            raise ValueError("subgroup generators do not lie in the group")
        sub_set = set(sub.element_images)
        gens = [g.images for g in group.generators]
        reps = [tuple(range(group.degree))]
        rows: list[list[int]] = [[-1] * len(gens)]
        frontier = [0]
        while frontier:
            nxt = []
            for pi in frontier:
                for gi, gen in enumerate(gens):
                    cand = compose_images(reps[pi], gen)
                    cand_inv = invert_images(cand)
                    target = None
                    for j, r in enumerate(reps):
                        if compose_images(r, cand_inv) in sub_set:
                            target = j
                            break
                    if target is None:
                        reps.append(cand)
                        rows.append([-1] * len(gens))
                        target = len(reps) - 1
                        nxt.append(target)
                    rows[pi][gi] = target
            frontier = nxt
        size = len(reps)
        if size * sub.order != group.order:
            raise RuntimeError("transversal size inconsistent with Lagrange")
        gen_action = np.array(rows, dtype=np.int32)
        return cls(
            group,
            sub,
            [Permutation._wrap(r) for r in reps],
            size,
            gen_action,
            kind="cosets",
        )

    @classmethod
    def natural(cls, group: GeneratedGroup) -> "CosetSpace":
        """The natural action of a transitive permutation group on its points."""
        if not group.is_transitive():
            raise ValueError("natural spaces require a transitive group")
        gen_action = np.array(
            [[g.images[p] for g in group.generators] for p in range(group.degree)],
            dtype=np.int32,
        )
        return cls(group, None, None, group.degree, gen_action, kind="natural")

    # -- the permutation representation -----------------------------------

    def _ensure_pi(self):
        """Rows of the action for every group element, then the faithful image."""
        if self._pi is not None:
            return
        g = self.group
        g._materialize()
        n = g.order
        pi = np.empty((n, self.size), dtype=np.int32)
        pi[0] = np.arange(self.size, dtype=np.int32)
        prov = g._prov
        gen_cols = [np.ascontiguousarray(self.gen_action[:, gi]) for gi in range(len(g.generators))]
        for i in range(1, n):
            parent, gi = prov[i]
            pi[i] = gen_cols[gi][pi[parent]]
        self._pi = pi
        # dedupe rows -> faithful image, keeping first-occurrence (BFS) order
        seen: dict[bytes, int] = {}
        orig_to_image = np.empty(n, dtype=np.int32)
        image_rows = []
        for i in range(n):
            key = pi[i].tobytes()
            j = seen.get(key)
            if j is None:
                j = len(image_rows)
                seen[key] = j
                image_rows.append(pi[i])
            orig_to_image[i] = j
        self._orig_to_image = orig_to_image
        self._image_pi = np.array(image_rows, dtype=np.int32)

    @property
    def image_pi(self) -> np.ndarray:
        """Action rows of the faithful image, identity row first."""
        self._ensure_pi()
        return self._image_pi

    @property
    def image_order(self) -> int:
        return self.image_pi.shape[0]

    @property
    def core_order(self) -> int:
        return self.group.order // self.image_order

    def is_faithful(self) -> bool:
        return self.core_order == 1

    def kernel(self) -> GeneratedGroup:
        """Elements acting trivially; equals the core of the subgroup."""
        self._ensure_pi()
        idxs = np.nonzero(self._orig_to_image == 0)[0]
        elems = [self.group.element_images[int(i)] for i in idxs]
        return GeneratedGroup.from_elements(self.group.degree, elems)

    # -- single-element action --------------------------------------------

    def act(self, point: int, g: Permutation) -> int:
        if not 0 <= point < self.size:
            raise ValueError(f"point {point} out of range")
        idx = self.group.element_index(g)
        self._ensure_pi()
        return int(self._image_pi[self._orig_to_image[idx], point])

    def act_tuple(self, t, g: Permutation):
        return tuple(self.act(p, g) for p in t)

    def point_stabilizer(self, point: int) -> GeneratedGroup:
        """{g in G : point^g = point} as a subgroup of the original group."""
        self._ensure_pi()
        rows = self._image_pi[self._orig_to_image][:, point]
        idxs = np.nonzero(rows == point)[0]
        elems = [self.group.element_images[int(i)] for i in idxs]
        return GeneratedGroup.from_elements(self.group.degree, elems)

    # -- stabilizer bitsets for the scan engine ----------------------------

    @property
    def h_indices(self) -> np.ndarray:
        """Image-element indices of the point-0 stabilizer, ascending."""
        if self._h_indices is None:
            self._h_indices = np.nonzero(self.image_pi[:, 0] == 0)[0]
        return self._h_indices

    @property
    def h_order(self) -> int:
        return int(self.h_indices.shape[0])

    @property
    def h_pi(self) -> np.ndarray:
        """Action rows of the point-0 stabilizer (within the image)."""
        return self.image_pi[self.h_indices]

    @property
    def stab_words_group(self) -> np.ndarray:
        """Per-point stabilizer bitsets over all image elements."""
        if self._stab_words_g is None:
            fixed = self.image_pi == np.arange(self.size, dtype=np.int32)[None, :]
            self._stab_words_g = pack_rows(fixed.T)
        return self._stab_words_g

    @property
    def stab_words_h(self) -> np.ndarray:
        """Per-point stabilizer bitsets over the point-0 stabilizer."""
        if self._stab_words_h is None:
            fixed = self.h_pi == np.arange(self.size, dtype=np.int32)[None, :]
            self._stab_words_h = pack_rows(fixed.T)
        return self._stab_words_h

    def group_masks(self) -> list[int]:
        if self._g_masks is None:
            self._g_masks = [
                int.from_bytes(row.tobytes(), "little") for row in self.stab_words_group
            ]
        return self._g_masks

    def h_masks(self) -> list[int]:
        if self._h_masks is None:
            self._h_masks = [
                int.from_bytes(row.tobytes(), "little") for row in self.stab_words_h
            ]
        return self._h_masks

    def fix_counts(self) -> np.ndarray:
        """Number of fixed points of each image element."""
        return (self.image_pi == np.arange(self.size, dtype=np.int32)[None, :]).sum(axis=1)

    def fix_counts_h(self) -> np.ndarray:
        return (self.h_pi == np.arange(self.size, dtype=np.int32)[None, :]).sum(axis=1)

    def __repr__(self) -> str:
        return (
            f"CosetSpace(kind={self.kind!r}, size={self.size}, "
            f"group_order={self.group.order})"
        )
