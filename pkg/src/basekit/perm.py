"""Permutation arithmetic and group closure by breadth-first generation.

Points are 0-based integers internally; every text surface (cycle strings,
group files, reports) uses 1-based labels.  Composition is the right action:
``p * q`` applies ``p`` first, then ``q``, so ``(p * q)(i) == q(p(i))``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BudgetError, ParseError

DEFAULT_ENUM_CAP = 10**7


def compose_images(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Image tuple of 'a followed by b' (right-action composition)."""
    return tuple(b[x] for x in a)


def invert_images(a: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def identity_images(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


class Permutation:
    """A bijection of {0, ..., degree-1} stored as an image tuple.

    Immutable and hashable; ``images[i]`` is the image of point ``i``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("degree must be positive")
        seen = [False] * n
        for x in images:
            if not (isinstance(x, int) and 0 <= x < n) or seen[x]:
                raise ValueError(f"images {images!r} are not a bijection of 0..{n - 1}")
            seen[x] = True
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _wrap(cls, images: tuple[int, ...]) -> "Permutation":
        # internal constructor for already-validated image tuples
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(identity_images(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} != {other.degree}"
            )
        return Permutation._wrap(compose_images(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._wrap(invert_images(self.images))

    __invert__ = inverse

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self under g, i.e. g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2 (0-based points)."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    return p * q


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated disjoint cycles of 1-based labels.

    The empty string and "()" both denote the identity; unlisted points are
    fixed.  Raises ParseError naming the offending token on repeated labels,
    out-of-range labels, or malformed parentheses.
    """
    if degree <= 0:
        raise ValueError("degree must be positive")
    images = list(range(degree))
    used = [False] * degree
    pos = 0
    text = text.strip()
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {text[pos:].split()[0]!r}")
        end = text.find(")", pos)
        if end < 0:
            raise ParseError(f"unclosed cycle starting at {text[pos:pos + 12]!r}")
        body = text[pos + 1 : end]
        labels = []
        for tok in body.replace(",", " ").split():
            try:
                lab = int(tok)
            except ValueError:
                raise ParseError(f"bad point label {tok!r}") from None
            if not 1 <= lab <= degree:
                raise ParseError(f"label {tok!r} out of range 1..{degree}")
            if used[lab - 1]:
                raise ParseError(f"repeated label {tok!r}")
            used[lab - 1] = True
            labels.append(lab - 1)
        for i, lab in enumerate(labels):
            images[lab] = labels[(i + 1) % len(labels)]
        pos = end + 1
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Cycle string with 1-based labels; the identity formats as "()"."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cycs)


def close_elements(
    degree: int,
    gen_images: Sequence[tuple[int, ...]],
    cap: int = DEFAULT_ENUM_CAP,
    seed_images: Iterable[tuple[int, ...]] | None = None,
    provenance: bool = False,
):
    """Breadth-first closure of <generators> under right multiplication.

    Returns (elements, index, prov) where elements is the list of image
    tuples in deterministic BFS order starting at the identity, index maps
    image tuple -> position, and prov[i] = (parent index, generator index)
    for i > 0 when requested (None otherwise).  Raises BudgetError with the
    partial count once the closure exceeds cap.
    """
    ident = identity_images(degree)
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    prov: list[tuple[int, int]] | None = [(-1, -1)] if provenance else None
    if seed_images is not None:
        for img in seed_images:
            if img not in index:
                index[img] = len(elems)
                elems.append(img)
                if prov is not None:
                    prov.append((-2, -2))
    frontier = list(range(len(elems)))
    while frontier:
        next_frontier = []
        for ei in frontier:
            src = elems[ei]
            for gi, gen in enumerate(gen_images):
                img = tuple(gen[x] for x in src)
                if img not in index:
                    index[img] = len(elems)
                    elems.append(img)
                    if prov is not None:
                        prov.append((ei, gi))
                    next_frontier.append(len(elems) - 1)
                    if len(elems) > cap:
                        raise BudgetError(
                            f"group closure exceeded cap {cap} "
                            f"(partial count {len(elems)})",
                            partial=len(elems),
                        )
        frontier = next_frontier
    return elems, index, prov


def reduce_generators(
    degree: int, element_images: Sequence[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Greedy small generating set for a closed element list."""
    target = len(element_images)
    if target == 1:
        return [identity_images(degree)]
    gens: list[tuple[int, ...]] = []
    have = 1
    for img in element_images:
        if img == identity_images(degree):
            continue
        elems, _, _ = close_elements(degree, gens + [img], cap=target)
        if len(elems) > have:
            gens.append(img)
            have = len(elems)
            if have == target:
                break
    return gens


class GeneratedGroup:
    """A permutation group given by generators, with lazy full enumeration.

    The element set is materialized once (breadth-first, deterministic order,
    identity first) and cached; enumeration beyond the cap raises BudgetError.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        enum_cap: int = DEFAULT_ENUM_CAP,
        name: str | None = None,
    ):
        if degree <= 0:
            raise ValueError("degree must be positive")
        generators = tuple(generators)
        if not generators:
            raise ValueError("generator list must be nonempty")
        for g in generators:
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
        self.degree = degree
        self.generators = generators
        self.enum_cap = enum_cap
        self.name = name
        self._elems: list[tuple[int, ...]] | None = None
        self._index: dict[tuple[int, ...], int] | None = None
        self._prov: list[tuple[int, int]] | None = None

    @classmethod
    def from_elements(
        cls,
        degree: int,
        elements: Iterable[Permutation | tuple[int, ...]],
        name: str | None = None,
    ) -> "GeneratedGroup":
        """Build a group from an already-closed element collection.

        A small generating set is extracted greedily; the cached element set
        keeps the BFS order of that generating set.
        """
        imgs = []
        seen = set()
        for e in elements:
            img = e.images if isinstance(e, Permutation) else tuple(e)
            if img not in seen:
                seen.add(img)
                imgs.append(img)
        if not imgs:
            raise ValueError("element collection must be nonempty")
        gens = reduce_generators(degree, imgs)
        g = cls(degree, [Permutation._wrap(x) for x in gens], name=name)
        g._materialize()
        if g.order != len(imgs):
            raise ValueError(
                "element collection is not closed under the group operation"
            )
        return g

    def _materialize(self, cap: int | None = None) -> None:
        if self._elems is None:
            elems, index, prov = close_elements(
                self.degree,
                [g.images for g in self.generators],
                cap=cap if cap is not None else self.enum_cap,
                provenance=True,
            )
            self._elems = elems
            self._index = index
            self._prov = prov

    def enumerate(self, cap: int | None = None) -> tuple[Permutation, ...]:
        """Full element set (cached); cap overrides the construction-time cap."""
        self._materialize(cap)
        return tuple(Permutation._wrap(img) for img in self._elems)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self.enumerate()

    @property
    def element_images(self) -> list[tuple[int, ...]]:
        self._materialize()
        return self._elems

    @property
    def order(self) -> int:
        self._materialize()
        return len(self._elems)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def element_index(self, p: Permutation) -> int:
        """BFS position of p; raises ValueError if p is not in the group."""
        self._materialize()
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        self._materialize()
        return p.images in self._index

    def __len__(self) -> int:
        return self.order

    def orbit(self, point: int) -> set[int]:
        """Orbit of a point under the generators (no full enumeration)."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")
        seen = {point}
        frontier = [point]
        gens = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for x in frontier:
                for gen in gens:
                    y = gen[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def conjugacy_class_reps(self) -> list[Permutation]:
        """One representative per conjugacy class, in element order."""
        self._materialize()
        gens = [g.images for g in self.generators]
        gen_invs = [invert_images(g) for g in gens]
        visited = set()
        reps = []
        for img in self._elems:
            if img in visited:
                continue
            reps.append(Permutation._wrap(img))
            frontier = [img]
            visited.add(img)
            while frontier:
                nxt = []
                for x in frontier:
                    for g, ginv in zip(gens, gen_invs):
                        y = compose_images(compose_images(ginv, x), g)
                        if y not in visited:
                            visited.add(y)
                            nxt.append(y)
                frontier = nxt
        return reps

    def same_elements(self, other: "GeneratedGroup") -> bool:
        if self.degree != other.degree or self.order != other.order:
            return False
        return set(self.element_images) == set(other.element_images)

    def contains_subgroup(self, other: "GeneratedGroup") -> bool:
        self._materialize()
        return all(g.images in self._index for g in other.generators)

    def __repr__(self) -> str:
        label = self.name or f"{len(self.generators)} generators"
        return f"GeneratedGroup(degree={self.degree}, {label})"
