"""Permutations on {1..n} and finitely generated permutation groups.

Composition convention: (g*h)(i) = g(h(i)), i.e. h acts first.  Cycle
words written side by side multiply left to right in that convention,
so the leftmost cycle is applied last.  Group closure is plain
breadth-first multiplication; the orders involved never exceed a few
thousand, so no stabilizer chains are needed.
"""

from __future__ import annotations

import re

CLOSURE_CAP = 50000


class PermError(ValueError):
    pass


class Perm:
    """images[i] is the image of point i+1 (all points 1-based)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise PermError("degree mismatch")
        return Perm(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(inv)

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        out = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.images, start=1))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self):
        return f"Perm[{self}]"


_CYCLE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation like "(1,2,3)(4,5)" into a Perm on n points.

    Adjacent cycles need not be disjoint; they compose left to right,
    leftmost applied last, matching the (g*h)(i) = g(h(i)) convention.
    """
    text = text.strip()
    if text in ("()", "e", "id", ""):
        return Perm.identity(n)
    pos = 0
    out = Perm.identity(n)
    matched = False
    while pos < len(text):
        m = _CYCLE.match(text, pos)
        if not m:
            if text[pos].isspace():
                pos += 1
                continue
            raise PermError(f"bad cycle notation at {text[pos:]!r}")
        matched = True
        points = [int(p) for p in m.group(1).split(",")]
        if len(set(points)) != len(points):
            raise PermError(f"repeated point in cycle {m.group(0)}")
        for p in points:
            if not 1 <= p <= n:
                raise PermError(f"point {p} out of range 1..{n}")
        images = list(range(1, n + 1))
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
        out = out * Perm(images)
        pos = m.end()
    if not matched:
        raise PermError(f"bad cycle notation {text!r}")
    return out


class PermGroup:
    """A finitely generated subgroup of S_n with its full element set."""

    def __init__(self, generators, degree=None, cap=CLOSURE_CAP):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise PermError("degree required for an empty generating set")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise PermError("generators of mixed degree")
        self.degree = degree
        self.generators = generators
        self.elements = self._close(generators, degree, cap)
        self.order = len(self.elements)

    @staticmethod
    def _close(generators, degree, cap):
        ident = Perm.identity(degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                for g in generators:
                    p = g * h
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
                        if len(seen) > cap:
                            raise PermError(f"closure exceeded cap {cap}")
            frontier = nxt
        return frozenset(seen)

    def __contains__(self, p: Perm):
        return p in self.elements

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.sorted_elements())

    def sorted_elements(self):
        return sorted(self.elements, key=lambda p: p.images)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.elements <= other.elements

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(order={self.order}, gens=[{gens}])"


def group_closure(gens, degree=None) -> PermGroup:
    return PermGroup(gens, degree=degree)


def is_normal(h: PermGroup, g: PermGroup) -> bool:
    """True iff h is a normal subgroup of g (h must be a subgroup of g)."""
    if not h.is_subgroup_of(g):
        raise PermError("first group is not a subgroup of the second")
    for gen in g.generators:
        inv = gen.inverse()
        for x in h.elements:
            if gen * x * inv not in h.elements:
                return False
    return True


def is_transitive(g: PermGroup) -> bool:
    orbit = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in g.generators:
                q = gen(p)
                if q not in orbit:
                    orbit.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(orbit) == g.degree


def wreath_product(inner: PermGroup, outer: PermGroup, blocks) -> PermGroup:
    """The wreath product of inner (on n points) by outer (on m points),
    as a permutation group on the given m blocks of n points each.

    blocks[j][k] is the point playing role k+1 inside block j+1.  The
    group is generated by inner acting in each block plus outer
    permuting the blocks position-wise.
    """
    n, m = inner.degree, outer.degree
    blocks = [list(b) for b in blocks]
    if len(blocks) != m or any(len(b) != n for b in blocks):
        raise PermError(f"blocks must be {m} lists of {n} points")
    pts = sorted(p for b in blocks for p in b)
    nm = n * m
    if pts != list(range(1, nm + 1)):
        raise PermError(f"blocks must partition 1..{nm}")
    gens = []
    for j in range(m):
        for h in inner.generators:
            images = list(range(1, nm + 1))
            for k in range(n):
                images[blocks[j][k] - 1] = blocks[j][h(k + 1) - 1]
            gens.append(Perm(images))
    for t in outer.generators:
        images = list(range(1, nm + 1))
        for j in range(m):
            for k in range(n):
                images[blocks[j][k] - 1] = blocks[t(j + 1) - 1][k]
        gens.append(Perm(images))
    return PermGroup(gens, degree=nm)


def _cyclic(n):
    return PermGroup([parse_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n)])


def named_group(name: str) -> PermGroup:
    """Small standard groups on their natural points, used as wreath factors."""
    if name == "C2":
        return _cyclic(2)
    if name == "C4":
        return _cyclic(4)
    if name == "V4":
        return PermGroup([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    if name == "D4":
        return PermGroup([parse_cycles("(1,2,3,4)", 4), parse_cycles("(2,4)", 4)])
    if name == "A4":
        return PermGroup([parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)])
    if name == "S4":
        return PermGroup([parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)])
    raise PermError(f"unknown named group {name!r}")


def groups_equal(a: PermGroup, b: PermGroup) -> bool:
    return a.degree == b.degree and a.elements == b.elements
