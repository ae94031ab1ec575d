"""Plane rooted trees, free trees, bracket codes and canonical forms.

A plane rooted tree (pr-tree) is stored as an ordered children table.  Its
bracket code is produced by the counterclockwise walk: a vertex opens a
bracket when first met and closes it when last met, so the root owns the
first "(" and the final ")".

Free trees carry dense 0-based vertex ids and an edge set.  Their canonical
key is the bracket code of the tree rooted at its centroid with every
children list sorted by code; for two centroids the smaller of the two such
codes is taken.  The key is itself a valid bracket code of the tree.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BracketParseError",
    "Color",
    "PlaneRootedTree",
    "FreeTree",
    "Passport",
    "BipartitePassport",
    "validate_code",
    "decode_bracket",
    "encode_bracket",
    "plane_to_free",
    "free_to_plane",
    "canonical_key",
    "rooted_canonical_code",
    "enumerate_free_trees",
    "enumerate_free_tree_keys",
    "all_codes",
    "degree_passport",
    "bipartite_passport",
    "chain",
    "star",
    "DEFAULT_ENUMERATION_CEILING",
]

DEFAULT_ENUMERATION_CEILING = 20


class BracketParseError(ValueError):
    """A bracket string that is not the code of a single plane rooted tree."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Color(enum.Enum):
    WHITE = "white"
    BLACK = "black"

    def other(self) -> "Color":
        return Color.BLACK if self is Color.WHITE else Color.WHITE

    def __str__(self) -> str:
        return self.value


def validate_code(code: str, *, allow_forest: bool = False) -> int:
    """Check a bracket string and return its number of bracket pairs.

    Raises BracketParseError pointing at the first offending offset.  With
    ``allow_forest`` a concatenation of tree codes (any proper balanced
    bracket structure, possibly empty) is accepted.
    """
    depth = 0
    pairs = 0
    for i, ch in enumerate(code):
        if ch == "(":
            if depth == 0 and i > 0 and not allow_forest:
                raise BracketParseError("code continues after the root closed", i)
            depth += 1
            pairs += 1
        elif ch == ")":
            if depth == 0:
                raise BracketParseError("closing bracket without an opening one", i)
            depth -= 1
        else:
            raise BracketParseError(f"unexpected character {ch!r}", i)
    if depth:
        raise BracketParseError("unclosed bracket", len(code))
    if pairs == 0 and not allow_forest:
        raise BracketParseError("empty code", 0)
    return pairs


@dataclass(frozen=True)
class PlaneRootedTree:
    """A tree embedded in the plane with a root; children are listed left to right.

    The leftmost root edge (to ``children[root][0]``) is the marked edge.
    """

    n: int
    root: int
    children: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        children = tuple(tuple(c) for c in self.children)
        object.__setattr__(self, "children", children)
        if self.n < 1 or len(children) != self.n:
            raise ValueError("children table must have one entry per vertex")
        if not 0 <= self.root < self.n:
            raise ValueError("root out of range")
        seen = {self.root}
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in children[v]:
                if not 0 <= c < self.n or c in seen:
                    raise ValueError("children relation is not a tree")
                seen.add(c)
                stack.append(c)
        if len(seen) != self.n:
            raise ValueError("children relation does not reach every vertex")

    @cached_property
    def parent(self) -> tuple[int, ...]:
        par = [-1] * self.n
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return tuple(par)

    def preorder(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        for v in reversed(self.preorder()):
            for c in self.children[v]:
                size[v] += size[c]
        return size

    @property
    def code(self) -> str:
        return encode_bracket(self)

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class FreeTree:
    """An unrooted, unembedded tree on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise ValueError("a tree needs at least one vertex")
        if len(edges) != self.n - 1 or len(set(edges)) != len(edges):
            raise ValueError(f"a tree on {self.n} vertices has exactly {self.n - 1} distinct edges")
        for u, v in edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad edge {(u, v)}")
        # n-1 edges + connected => acyclic
        adj = self.adjacency
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise ValueError("edges do not form a connected graph")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def relabel(self, mapping: Sequence[int]) -> "FreeTree":
        """Return the tree with vertex ``v`` renamed to ``mapping[v]``."""
        return FreeTree(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "FreeTree":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))


Passport = list[int]


@dataclass(frozen=True)
class BipartitePassport:
    white: list[int]
    black: list[int]


def decode_bracket(code: str) -> PlaneRootedTree:
    """Build the pr-tree whose walkabout produces ``code``.

    Vertex ids are assigned in order of first visit, so the root is 0.
    """
    n = validate_code(code)
    children: list[list[int]] = [[] for _ in range(n)]
    stack: list[int] = []
    next_id = 0
    for ch in code:
        if ch == "(":
            if stack:
                children[stack[-1]].append(next_id)
            stack.append(next_id)
            next_id += 1
        else:
            stack.pop()
    return PlaneRootedTree(n, 0, tuple(tuple(c) for c in children))


def encode_bracket(tree: PlaneRootedTree) -> str:
    out = []
    # explicit stack: (vertex, entering?)
    stack: list[tuple[int, bool]] = [(tree.root, True)]
    while stack:
        v, entering = stack.pop()
        if entering:
            out.append("(")
            stack.append((v, False))
            for c in reversed(tree.children[v]):
                stack.append((c, True))
        else:
            out.append(")")
    return "".join(out)


def plane_to_free(tree: PlaneRootedTree) -> FreeTree:
    edges = tuple((v, c) for v, kids in enumerate(tree.children) for c in kids)
    return FreeTree(tree.n, edges)


def free_to_plane(tree: FreeTree, root: int = 0) -> PlaneRootedTree:
    """Root a free tree at ``root`` with every children list in ascending id order."""
    children: list[tuple[int, ...]] = [()] * tree.n
    parent = [-1] * tree.n
    parent[root] = root
    stack = [root]
    while stack:
        v = stack.pop()
        kids = tuple(w for w in tree.adjacency[v] if w != parent[v])
        for w in kids:
            parent[w] = v
        children[v] = kids
        stack.extend(kids)
    return PlaneRootedTree(tree.n, root, tuple(children))


def chain(n: int) -> FreeTree:
    return FreeTree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> FreeTree:
    """Star on n vertices centred at vertex 0."""
    return FreeTree(n, tuple((0, i) for i in range(1, n)))


# ---------------------------------------------------------------------------
# canonical forms


def rooted_canonical_code(adj: Sequence[Sequence[int]], root: int) -> str:
    """AHU code of the tree rooted at ``root``: children codes sorted ascending."""
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    codes: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(codes.pop(w) for w in adj[v] if w != parent[v])
        codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def centroids(tree: FreeTree) -> list[int]:
    n = tree.n
    if n == 1:
        return [0]
    rooted = free_to_plane(tree, 0)
    size = rooted.subtree_sizes()
    out = []
    for v in range(n):
        heaviest = max([size[c] for c in rooted.children[v]] + [n - size[v]])
        if 2 * heaviest <= n:
            out.append(v)
    return out


def canonical_key(tree: FreeTree) -> str:
    """Isomorphism-class key: equal for two free trees iff they are isomorphic."""
    return min(rooted_canonical_code(tree.adjacency, c) for c in centroids(tree))


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _rooted_codes(size: int) -> tuple[str, ...]:
    """Canonical codes of all unlabeled rooted trees with ``size`` vertices."""
    if size == 1:
        return ("()",)
    return tuple(sorted("(" + "".join(f) + ")" for f in _forests(size - 1, size - 1)))


def _forests(total: int, max_part: int) -> Iterator[tuple[str, ...]]:
    """Multisets of canonical rooted codes with sizes summing to ``total``.

    Parts have at most ``max_part`` vertices; each multiset is yielded once,
    as a sorted tuple of codes.
    """
    catalogue = [(s, c) for s in range(1, max_part + 1) for c in _rooted_codes(s)]

    def rec(remaining: int, limit: int) -> Iterator[list[str]]:
        if remaining == 0:
            yield []
            return
        for idx in range(limit, -1, -1):
            s, c = catalogue[idx]
            if s > remaining:
                continue
            for rest in rec(remaining - s, idx):
                yield [c] + rest

    for parts in rec(total, len(catalogue) - 1):
        yield tuple(sorted(parts))


def enumerate_free_tree_keys(n: int, *, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> list[str]:
    """Canonical keys of all free trees on ``n`` vertices, sorted."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the enumeration ceiling {ceiling}")
    if n == 1:
        return ["()"]
    # one centroid: every branch at the root has fewer than n/2 vertices
    keys = ["(" + "".join(f) + ")" for f in _forests(n - 1, (n - 1) // 2)]
    if n % 2 == 0:
        half = _rooted_codes(n // 2)
        for i, a in enumerate(half):
            for b in half[i:]:
                keys.append(canonical_key(_join_at_roots(a, b)))
    return sorted(keys)


def _join_at_roots(a: str, b: str) -> FreeTree:
    """Free tree made of rooted trees ``a`` and ``b`` with their roots joined."""
    ta = plane_to_free(decode_bracket(a))
    tb = plane_to_free(decode_bracket(b))
    k = ta.n
    edges = ta.edges + tuple((u + k, v + k) for u, v in tb.edges) + ((0, k),)
    return FreeTree(ta.n + tb.n, edges)


def enumerate_free_trees(n: int, *, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> list[FreeTree]:
    """One tree per isomorphism class, ordered by canonical key."""
    return [plane_to_free(decode_bracket(k)) for k in enumerate_free_tree_keys(n, ceiling=ceiling)]


def all_codes(n: int) -> Iterator[str]:
    """Every bracket code of a pr-tree with n vertices (Catalan(n-1) of them)."""
    if n < 1:
        return
    for inner in _proper_words(2 * (n - 1)):
        yield "(" + inner + ")"


def _proper_words(length: int) -> Iterator[str]:
    def rec(prefix: list[str], opened: int, depth: int) -> Iterator[str]:
        if len(prefix) == length:
            yield "".join(prefix)
            return
        if opened < length // 2:
            prefix.append("(")
            yield from rec(prefix, opened + 1, depth + 1)
            prefix.pop()
        if depth > 0:
            prefix.append(")")
            yield from rec(prefix, opened, depth - 1)
            prefix.pop()

    yield from rec([], 0, 0)


# ---------------------------------------------------------------------------
# passports


def degree_passport(tree: FreeTree) -> Passport:
    """[a_1, ..., a_m] with a_i the number of vertices of degree i."""
    if tree.n < 2:
        raise ValueError("passport needs at least one edge")
    m = tree.n - 1
    counts = Counter(len(a) for a in tree.adjacency)
    return [counts.get(i, 0) for i in range(1, m + 1)]


def two_coloring(tree: FreeTree, base: Color = Color.WHITE, base_vertex: int = 0) -> list[Color]:
    colors: list[Color | None] = [None] * tree.n
    colors[base_vertex] = base
    stack = [base_vertex]
    while stack:
        v = stack.pop()
        for w in tree.adjacency[v]:
            if colors[w] is None:
                colors[w] = colors[v].other()
                stack.append(w)
    return colors  # type: ignore[return-value]


def bipartite_passport(tree: FreeTree, color_of_vertex0: Color = Color.WHITE) -> BipartitePassport:
    if tree.n < 2:
        raise ValueError("passport needs at least one edge")
    m = tree.n - 1
    colors = two_coloring(tree, color_of_vertex0)
    white = [0] * m
    black = [0] * m
    for v, c in enumerate(colors):
        (white if c is Color.WHITE else black)[tree.degree(v) - 1] += 1
    return BipartitePassport(white, black)


def parse_edges(pairs: Iterable[Sequence[int]], n: int | None = None) -> FreeTree:
    pairs = [tuple(p) for p in pairs]
    if n is None:
        n = len(pairs) + 1
    return FreeTree(n, tuple((int(u), int(v)) for u, v in pairs))
