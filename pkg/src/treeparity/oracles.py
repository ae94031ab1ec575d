"""Slow reference implementations.

Each function recomputes a quantity by a route that shares no code with the
fast path it is compared against.  Only meant for small inputs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import networkx as nx

__all__ = [
    "pairwise_inversions",
    "closure_order",
    "cofactor_char_poly",
    "kuratowski_planar",
    "grown_free_trees",
    "prufer_trees",
]


def pairwise_inversions(code: str) -> int:
    return sum(1 for i, j in combinations(range(len(code)), 2) if code[i] == ")" and code[j] == "(")


def closure_order(generators: Sequence[Sequence[int]], degree: int) -> int:
    """Size of the group generated, by breadth-first closure under right multiplication."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    size = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _trim(a: tuple[int, ...]) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def cofactor_char_poly(n: int, edges: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Coefficients (low to high) of det(xI - A), by Laplace expansion along rows."""
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = 1

    def entry(i: int, j: int) -> tuple[int, ...]:
        if i == j:
            return (0, 1)
        return (-adj[i][j],) if adj[i][j] else ()

    @lru_cache(maxsize=None)
    def minor(used: int) -> tuple[int, ...]:
        row = bin(used).count("1")
        if row == n:
            return (1,)
        total: tuple[int, ...] = ()
        free = [j for j in range(n) if not used >> j & 1]
        for pos, j in enumerate(free):
            e = entry(row, j)
            if not e:
                continue
            term = _pmul(e, minor(used | 1 << j))
            if pos % 2:
                term = tuple(-c for c in term)
            total = _padd(total, term)
        return total

    return _trim(minor(0))


def kuratowski_planar(num_vertices: int, edges: Iterable[Sequence[int]]) -> bool:
    """Planarity of a graph on at most 7 vertices by direct Kuratowski search.

    With so few vertices a K5 subdivision has at most two subdivision
    vertices and a K3,3 subdivision at most one, so both can be searched
    exhaustively over branch-vertex choices.
    """
    if num_vertices > 7:
        raise ValueError("exhaustive Kuratowski search is limited to 7 vertices")
    adj = [set() for _ in range(num_vertices)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    verts = range(num_vertices)

    def joined(u: int, v: int, extras: Sequence[int]) -> bool:
        """u and v joined by an edge or by a path through ``extras`` (in some order)."""
        if not extras:
            return v in adj[u]
        for order in permutations(extras):
            path = (u, *order, v)
            if all(path[i + 1] in adj[path[i]] for i in range(len(path) - 1)):
                return True
        return False

    for branch in combinations(verts, 5):
        spare = [v for v in verts if v not in branch]
        missing = [(u, v) for u, v in combinations(branch, 2) if v not in adj[u]]
        if not missing:
            return False
        if len(missing) > len(spare):
            continue
        # assign disjoint, non-empty groups of spare vertices to the missing pairs
        for labels in product(range(len(missing) + 1), repeat=len(spare)):
            groups = [[s for s, lab in zip(spare, labels) if lab == k + 1] for k in range(len(missing))]
            if any(not grp for grp in groups):
                continue
            if all(joined(u, v, grp) for (u, v), grp in zip(missing, groups)):
                return False

    for six in combinations(verts, 6):
        spare = [v for v in verts if v not in six]
        first = six[0]
        for rest in combinations(six[1:], 2):
            left = (first, *rest)
            right = tuple(v for v in six if v not in left)
            missing = [(u, v) for u in left for v in right if v not in adj[u]]
            if not missing:
                return False
            if len(missing) == 1 and spare:
                u, v = missing[0]
                if any(u in adj[s] and v in adj[s] for s in spare):
                    return False
    return True


def grown_free_trees(n: int) -> list[nx.Graph]:
    """Non-isomorphic trees on n vertices, grown leaf by leaf.

    Deduplication uses networkx isomorphism, not canonical keys.
    """
    if n < 1:
        raise ValueError("n must be positive")
    level = [nx.empty_graph(1)]
    for size in range(1, n):
        buckets: dict[tuple, list[nx.Graph]] = {}
        for t in level:
            for v in range(size):
                g = t.copy()
                g.add_edge(v, size)
                sig = tuple(sorted(d for _, d in g.degree()))
                same = buckets.setdefault(sig, [])
                if not any(nx.is_isomorphic(g, h) for h in same):
                    same.append(g)
        level = [g for grp in buckets.values() for g in grp]
    return level


def prufer_trees(n: int) -> Iterable[list[tuple[int, int]]]:
    """Every labeled tree on vertices 0..n-1 (n**(n-2) of them), as edge lists."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [w for w in range(n) if degree[w] == 1]
        edges.append((u, v))
        yield edges
