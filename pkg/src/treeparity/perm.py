"""Permutations of edge labels and the groups they generate.

Permutations act on the right and compose left to right:
``(p * q)(i) == q(p(i))``.  With this convention the white and black edge
rotations of a plane tree multiply to a single m-cycle, ``s_w * s_b``.

Points are 0-based internally; cycle notation is printed 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "PermGroup",
    "compose",
    "sign",
    "cycle_type",
    "group_order",
    "contains",
    "in_alternating",
    "DEFAULT_DEGREE_CEILING",
]

DEFAULT_DEGREE_CEILING = 40


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]], *, one_based: bool = True) -> "Permutation":
        images = list(range(degree))
        shift = 1 if one_based else 0
        for cyc in cycles:
            pts = [c - shift for c in cyc]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``."""
        cycles = [[int(x) for x in body.replace(",", " ").split()] for body in re.findall(r"\(([^()]*)\)", text)]
        return cls.from_cycles(degree, [c for c in cycles if c])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def conjugate(self, r: "Permutation") -> "Permutation":
        """``r^-1 * self * r``: relabel point ``i`` as ``r(i)``."""
        return r.inverse() * self * r

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return sign(self)

    def cycle_type(self) -> list[int]:
        return cycle_type(self)

    def restrict(self, points: Sequence[int]) -> "Permutation":
        """The action on an invariant subset, re-indexed by sorted ``points``."""
        pts = sorted(points)
        index = {p: i for i, p in enumerate(pts)}
        try:
            return Permutation(tuple(index[self.images[p]] for p in pts))
        except KeyError:
            raise ValueError("point set is not invariant") from None

    def __str__(self) -> str:
        parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[j] for j in p.images))


def sign(p: Permutation) -> int:
    return -1 if (p.degree - len(p.cycles())) % 2 else 1


def cycle_type(p: Permutation) -> list[int]:
    """Cycle lengths, fixed points included, in descending order."""
    return sorted((len(c) for c in p.cycles()), reverse=True)


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Permutation] = []
        # point -> element carrying the base point to it
        self.transversal: dict[int, Permutation] = {base: Permutation.identity(degree)}


class PermGroup:
    """Group generated by a list of permutations of a common degree.

    The stabilizer chain is built on first use by deterministic
    Schreier-Sims (Knuth's sifting formulation).  Build it from one thread;
    afterwards every query only reads it.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 *, ceiling: int = DEFAULT_DEGREE_CEILING):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("all generators must have the same degree")
        if degree > ceiling:
            raise ValueError(f"degree {degree} exceeds the ceiling {ceiling}")
        self.degree = degree
        self.generators = tuple(gens)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators=[{', '.join(map(str, self.generators))}])"

    @cached_property
    def _chain(self) -> list[_Level]:
        levels: list[_Level] = []
        for g in self.generators:
            self._add(levels, 0, g)
        return levels

    def _sift(self, levels: list[_Level], k: int, g: Permutation) -> Permutation | None:
        """Strip ``g`` through levels k.. ; None if it falls out of an orbit."""
        for lvl in levels[k:]:
            u = lvl.transversal.get(g.images[lvl.base])
            if u is None:
                return None
            g = g * u.inverse()
        return g

    def _add(self, levels: list[_Level], k: int, g: Permutation) -> None:
        residue = self._sift(levels, k, g)
        if residue is not None and residue.is_identity():
            return
        if k == len(levels):
            moved = next(i for i, j in enumerate(g.images) if i != j)
            levels.append(_Level(moved, self.degree))
        lvl = levels[k]
        lvl.gens.append(g)
        for u in list(lvl.transversal.values()):
            self._close(levels, k, u * g)

    def _close(self, levels: list[_Level], k: int, g: Permutation) -> None:
        lvl = levels[k]
        x = g.images[lvl.base]
        u = lvl.transversal.get(x)
        if u is not None:
            h = g * u.inverse()
            if not h.is_identity():
                self._add(levels, k + 1, h)
            return
        lvl.transversal[x] = g
        for s in list(lvl.gens):
            self._close(levels, k, g * s)

    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self._chain]

    def order(self) -> int:
        out = 1
        for lvl in self._chain:
            out *= len(lvl.transversal)
        return out

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        residue = self._sift(self._chain, 0, p)
        return residue is not None and residue.is_identity()

    def is_alternating_subgroup(self) -> bool:
        return all(sign(g) == 1 for g in self.generators)

    def conjugate(self, r: Permutation) -> "PermGroup":
        return PermGroup([g.conjugate(r) for g in self.generators], self.degree)


def group_order(g: PermGroup) -> int:
    return g.order()


def contains(g: PermGroup, p: Permutation) -> bool:
    return p in g


def in_alternating(g: PermGroup) -> bool:
    """True iff every generator (hence the whole group) is even."""
    return g.is_alternating_subgroup()
