"""Named group constructors, the group-spec grammar, and group files.

Specs: sym(n), alt(n), cyc(n), dih(n), young(a,b,...), wreath(spec,spec),
young-wreath(m,t).  Group files are UTF-8 text: a ``degree N`` line, one
``gen <cycles>`` line per generator (1-based labels), ``#`` comments.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .perm import GeneratedGroup, Permutation, format_cycles, parse_cycles
from .wreath import wreath_product

MAX_DEGREE = 64


def sym(n: int) -> GeneratedGroup:
    _check_degree(n)
    if n == 1:
        return GeneratedGroup(1, [Permutation.identity(1)], name="sym(1)")
    gens = [Permutation([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(Permutation(list(range(1, n)) + [0]))
    return GeneratedGroup(n, gens, name=f"sym({n})")


def alt(n: int) -> GeneratedGroup:
    _check_degree(n)
    if n <= 2:
        return GeneratedGroup(n, [Permutation.identity(n)], name=f"alt({n})")
    gens = []
    for i in range(n - 2):
        images = list(range(n))
        images[i], images[i + 1], images[i + 2] = images[i + 1], images[i + 2], images[i]
        gens.append(Permutation(images))
    return GeneratedGroup(n, gens, name=f"alt({n})")


def cyc(n: int) -> GeneratedGroup:
    _check_degree(n)
    if n == 1:
        return GeneratedGroup(1, [Permutation.identity(1)], name="cyc(1)")
    return GeneratedGroup(n, [Permutation(list(range(1, n)) + [0])], name=f"cyc({n})")


def dih(n: int) -> GeneratedGroup:
    if n < 3:
        raise ParseError(f"dih({n}) unsupported: the dihedral catalog needs n >= 3")
    _check_degree(n)
    rotation = Permutation(list(range(1, n)) + [0])
    reflection = Permutation([(n - i) % n for i in range(n)])
    return GeneratedGroup(n, [rotation, reflection], name=f"dih({n})")


def young(parts: list[int]) -> GeneratedGroup:
    if not parts or any(p < 1 for p in parts):
        raise ParseError(f"young parts must be positive integers, got {parts}")
    n = sum(parts)
    _check_degree(n)
    gens = []
    off = 0
    for p in parts:
        for i in range(off, off + p - 1):
            images = list(range(n))
            images[i], images[i + 1] = images[i + 1], images[i]
            gens.append(Permutation(images))
        off += p
    if not gens:
        gens = [Permutation.identity(n)]
    name = "young(" + ",".join(str(p) for p in parts) + ")"
    return GeneratedGroup(n, gens, name=name)


def _check_degree(n: int):
    if not 1 <= n <= MAX_DEGREE:
        raise ParseError(f"degree {n} out of supported range 1..{MAX_DEGREE}")


_NAME_RE = re.compile(r"[a-z][a-z-]*")


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(f"{msg} at position {self.pos} in spec {self.text!r}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_spec(self) -> GeneratedGroup:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            self.error("expected a group name")
        name = m.group(0)
        self.pos = m.end()
        self.expect("(")
        if name == "sym":
            g = sym(self.parse_int())
        elif name == "alt":
            g = alt(self.parse_int())
        elif name == "cyc":
            g = cyc(self.parse_int())
        elif name == "dih":
            g = dih(self.parse_int())
        elif name == "young":
            parts = [self.parse_int()]
            self.skip_ws()
            while self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                parts.append(self.parse_int())
            g = young(parts)
        elif name == "wreath":
            inner = self.parse_spec()
            self.expect(",")
            outer = self.parse_spec()
            g = wreath_product(inner, outer)
        elif name == "young-wreath":
            mm = self.parse_int()
            self.expect(",")
            tt = self.parse_int()
            g = wreath_product(sym(mm), sym(tt))
            g.name = f"young-wreath({mm},{tt})"
        else:
            self.error(f"unknown group name {name!r}")
        self.expect(")")
        return g


def catalog(spec: str) -> GeneratedGroup:
    """Build a catalog group from its spec string."""
    parser = _SpecParser(spec)
    g = parser.parse_spec()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.error("trailing input after group spec")
    if g.name is None:
        g.name = spec.strip()
    return g


def load_group_text(text: str) -> GeneratedGroup:
    """Parse the group file format."""
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("degree"):
            if degree is not None:
                raise ParseError(f"line {lineno}: duplicate degree line")
            try:
                degree = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError(f"line {lineno}: malformed degree line {raw!r}") from None
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive")
        elif line.startswith("gen"):
            if degree is None:
                raise ParseError(f"line {lineno}: gen before degree")
            gens.append(parse_cycles(line[3:].strip(), degree))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {raw!r}")
    if degree is None:
        raise ParseError("missing degree line")
    if not gens:
        gens = [Permutation.identity(degree)]
    return GeneratedGroup(degree, gens)


def dump_group_text(group: GeneratedGroup) -> str:
    lines = [f"degree {group.degree}"]
    lines += [f"gen {format_cycles(g)}" for g in group.generators]
    return "\n".join(lines) + "\n"


def extend_degree(group: GeneratedGroup, degree: int) -> GeneratedGroup:
    """Re-embed a group on fewer points by fixing the trailing points."""
    if degree == group.degree:
        return group
    if degree < group.degree:
        raise ParseError(
            f"cannot shrink a degree-{group.degree} group to degree {degree}"
        )
    gens = [
        Permutation(list(g.images) + list(range(group.degree, degree)))
        for g in group.generators
    ]
    return GeneratedGroup(degree, gens, enum_cap=group.enum_cap, name=group.name)
