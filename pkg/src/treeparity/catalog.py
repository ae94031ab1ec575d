"""Named trees with known properties, used by ``verify`` and the tests."""

from __future__ import annotations

from .trees import FreeTree


def _spine(length: int, hangs: dict[int, list[int]]) -> FreeTree:
    """A path 0..length-1 with rooted pieces hung on its vertices.

    ``hangs[i]`` lists piece sizes attached at spine vertex ``i``; a piece of
    size k is a path of k vertices whose first vertex joins the spine.
    """
    edges = [(i, i + 1) for i in range(length - 1)]
    nxt = length
    for at, sizes in sorted(hangs.items()):
        for size in sizes:
            prev = at
            for _ in range(size):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return FreeTree(nxt, tuple(edges))


# 8 vertices, char poly x^8-7x^6+9x^4, both even
COSPECTRAL_8 = (
    _spine(4, {1: [1, 1], 2: [1, 1]}),
    _spine(4, {0: [1, 1, 1, 1]}),
)

# 12 vertices, char poly x^12-11x^10+42x^8-66x^6+39x^4-6x^2; even, odd
COSPECTRAL_12 = (
    _spine(9, {1: [1], 2: [1], 4: [1]}),
    _spine(9, {1: [1], 4: [1], 5: [1]}),
)
COSPECTRAL_12_PARITIES = ("even", "odd")

# Six 10-vertex trees spanning a K_{3,3} subdivision in G_10: {a, b, c} vs {d, e, f}.
K33_TREES = {
    "a": _spine(4, {1: [1, 1], 2: [1, 1], 3: [1, 1]}),
    "b": _spine(4, {1: [1, 1], 2: [2, 2]}),
    "c": FreeTree(10, ((0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (5, 6), (3, 7), (7, 8), (7, 9))),
    "d": FreeTree(10, ((0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (5, 6), (2, 7), (7, 8), (7, 9))),
    "e": _spine(3, {1: [1, 1], 2: [2, 1, 1, 1]}),
    "f": _spine(5, {1: [1, 1], 2: [1], 3: [1, 1]}),
}

# (x, y, k): x reaches y in k transpositions along an exhibited chain
K33_CHAINS = (
    ("a", "d", 1), ("b", "d", 1), ("c", "d", 1),
    ("a", "e", 1), ("b", "e", 1), ("c", "e", 3),
    ("a", "f", 1), ("c", "f", 3), ("b", "f", 9),
)
