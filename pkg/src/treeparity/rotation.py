"""Bipartite plane trees, edge rotations and rotation groups.

Every non-root vertex ``v`` of a plane rooted tree owns the edge to its
parent, so edges are addressed by their lower endpoint.  Going
counterclockwise around a vertex the incident edges appear as: the parent
edge, then the child edges from left to right, and back to the parent edge.
``s_w`` advances one step around every white vertex and ``s_b`` around every
black one; ``s_w * s_b`` is then a single m-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parity import OddVertexCountError, Parity
from .perm import Permutation, PermGroup, in_alternating, sign
from .trees import Color, FreeTree, PlaneRootedTree, free_to_plane, two_coloring

__all__ = [
    "BipartitePlaneTree",
    "RotationPair",
    "CleanTreeSplit",
    "make_bipartite",
    "rotation_pair",
    "rotation_group",
    "alternating_signature",
    "clean_tree",
    "sigma_parities",
    "even_degree_census",
    "rotation_report",
    "free_rotation_pair",
]


@dataclass(frozen=True)
class BipartitePlaneTree:
    tree: PlaneRootedTree
    colors: tuple[Color, ...]
    # edge_label[v] is the label of the edge between v and its parent; -1 at the root
    edge_label: tuple[int, ...]

    def __post_init__(self):
        t = self.tree
        for v in range(t.n):
            for c in t.children[v]:
                if self.colors[c] is self.colors[v]:
                    raise ValueError(f"adjacent vertices {v}, {c} share a colour")
        labels = sorted(lbl for v, lbl in enumerate(self.edge_label) if v != t.root)
        if labels != list(range(t.n - 1)):
            raise ValueError("edge labels must be a bijection onto 0..m-1")

    @property
    def m(self) -> int:
        return self.tree.n - 1

    def relabel(self, r: Permutation) -> "BipartitePlaneTree":
        """Rename edge ``i`` to ``r(i)``."""
        labels = tuple(-1 if lbl < 0 else r(lbl) for lbl in self.edge_label)
        return BipartitePlaneTree(self.tree, self.colors, labels)

    def around(self, v: int) -> list[int]:
        """Edge labels at ``v`` in counterclockwise order."""
        t = self.tree
        out = [] if v == t.root else [self.edge_label[v]]
        out.extend(self.edge_label[c] for c in t.children[v])
        return out


@dataclass(frozen=True)
class RotationPair:
    s_w: Permutation
    s_b: Permutation

    @property
    def product(self) -> Permutation:
        return self.s_w * self.s_b


@dataclass(frozen=True)
class CleanTreeSplit:
    """The clean tree of T with the rotation around white vertices split in two.

    ``n_w`` / ``n_b`` are the clean-tree edge labels at vertices that were
    white / black in T; ``sigma_w`` / ``sigma_b`` are ``s_w`` restricted to
    them, indexed by the sorted label lists.
    """

    clean: BipartitePlaneTree
    n_w: tuple[int, ...]
    n_b: tuple[int, ...]
    sigma_w: Permutation
    sigma_b: Permutation
    pair: RotationPair


def _walk_labels(tree: PlaneRootedTree) -> tuple[int, ...]:
    labels = [-1] * tree.n
    for i, v in enumerate(tree.preorder()[1:]):
        labels[v] = i
    return tuple(labels)


def make_bipartite(tree: PlaneRootedTree, root_color: Color = Color.WHITE) -> BipartitePlaneTree:
    """Colour by depth parity; label edges in order of first traversal."""
    colors: list[Color] = [root_color] * tree.n
    for v in tree.preorder():
        for c in tree.children[v]:
            colors[c] = colors[v].other()
    return BipartitePlaneTree(tree, tuple(colors), _walk_labels(tree))


def rotation_pair(bt: BipartitePlaneTree) -> RotationPair:
    m = bt.m
    s = {Color.WHITE: list(range(m)), Color.BLACK: list(range(m))}
    for v in range(bt.tree.n):
        ring = bt.around(v)
        images = s[bt.colors[v]]
        for a, b in zip(ring, ring[1:] + ring[:1]):
            images[a] = b
    return RotationPair(Permutation(tuple(s[Color.WHITE])), Permutation(tuple(s[Color.BLACK])))


def rotation_group(bt: BipartitePlaneTree, **kwargs) -> PermGroup:
    pair = rotation_pair(bt)
    return PermGroup([pair.s_w, pair.s_b], bt.m, **kwargs)


def alternating_signature(tree: FreeTree) -> bool:
    """Whether R(T) lies in the alternating group; defined for even n."""
    if tree.n % 2:
        raise OddVertexCountError(tree.n)
    return in_alternating(rotation_group(make_bipartite(free_to_plane(tree, 0))))


def clean_tree(tree: FreeTree) -> CleanTreeSplit:
    """Subdivide every edge of T by a black vertex.

    T is rooted at 0 with ascending children.  The midpoint of the edge
    from ``v`` to its parent gets id ``n + v - 1``.
    """
    if tree.n < 2:
        raise ValueError("clean tree needs at least one edge")
    n = tree.n
    rooted = free_to_plane(tree, 0)
    children: list[tuple[int, ...]] = [()] * (2 * n - 1)
    for v in range(n):
        mids = tuple(n + c - 1 for c in rooted.children[v])
        children[v] = mids
        for c, mid in zip(rooted.children[v], mids):
            children[mid] = (c,)
    ct = PlaneRootedTree(2 * n - 1, 0, tuple(children))
    colors = tuple(Color.WHITE if v < n else Color.BLACK for v in range(2 * n - 1))
    bt = BipartitePlaneTree(ct, colors, _walk_labels(ct))
    pair = rotation_pair(bt)

    t_colors = two_coloring(tree, Color.WHITE)
    n_w: list[int] = []
    n_b: list[int] = []
    for v in range(n):
        (n_w if t_colors[v] is Color.WHITE else n_b).extend(bt.around(v))
    n_w.sort()
    n_b.sort()
    return CleanTreeSplit(
        clean=bt,
        n_w=tuple(n_w),
        n_b=tuple(n_b),
        sigma_w=pair.s_w.restrict(n_w),
        sigma_b=pair.s_w.restrict(n_b),
        pair=pair,
    )


def sigma_parities(split: CleanTreeSplit) -> tuple[int, int]:
    return sign(split.sigma_w), sign(split.sigma_b)


def even_degree_census(tree: FreeTree, base: Color = Color.WHITE) -> tuple[Parity, Parity]:
    """Parities of the numbers of white and of black vertices of even degree."""
    if tree.n % 2:
        raise OddVertexCountError(tree.n)
    colors = two_coloring(tree, base)
    white = sum(1 for v in range(tree.n) if colors[v] is Color.WHITE and tree.degree(v) % 2 == 0)
    black = sum(1 for v in range(tree.n) if colors[v] is Color.BLACK and tree.degree(v) % 2 == 0)
    return Parity.of(white), Parity.of(black)


def rotation_report(tree: PlaneRootedTree, root_color: Color = Color.WHITE) -> dict:
    bt = make_bipartite(tree, root_color)
    pair = rotation_pair(bt)
    group = PermGroup([pair.s_w, pair.s_b], bt.m)
    return {
        "m": bt.m,
        "s_w": str(pair.s_w),
        "s_b": str(pair.s_b),
        "order": group.order(),
        "in_alternating": in_alternating(group),
    }


def free_rotation_pair(tree: FreeTree, root: int = 0, root_color: Color = Color.WHITE) -> RotationPair:
    return rotation_pair(make_bipartite(free_to_plane(tree, root), root_color))

