"""Inversions and parity of plane trees, and the moves that act on them.

An inversion is a closing bracket standing anywhere before an opening one.
A pr-tree is even when its code has an even number of inversions.  For an
even number of vertices the parity survives re-rooting, so free trees with
even ``n`` have a well-defined parity; each transposition flips it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .trees import (
    FreeTree,
    PlaneRootedTree,
    decode_bracket,
    encode_bracket,
    free_to_plane,
    validate_code,
)

__all__ = [
    "Parity",
    "OddVertexCountError",
    "TranspositionMove",
    "count_inversions",
    "parity_rooted",
    "parity_free",
    "permute_level_one",
    "reroot_along_marked",
    "marked_edge_forests",
    "transpose",
    "transposition_moves",
    "split_sum",
    "join_sum",
    "chain_reduction",
    "apply_moves",
    "free_parity_via_moves",
]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, count: int) -> "Parity":
        return cls.EVEN if count % 2 == 0 else cls.ODD

    def flipped(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN

    def __str__(self) -> str:
        return self.value


class OddVertexCountError(ValueError):
    def __init__(self, n: int):
        super().__init__(f"parity undefined for odd vertex count (n={n})")
        self.n = n


@dataclass(frozen=True)
class TranspositionMove:
    """Move leaf ``leaf`` off its neighbour ``support`` onto ``target``."""

    leaf: int
    support: int
    target: int

    def check(self, tree: FreeTree) -> None:
        if not 0 <= self.leaf < tree.n or tree.degree(self.leaf) != 1:
            raise ValueError(f"vertex {self.leaf} is not a leaf")
        if not tree.has_edge(self.leaf, self.support):
            raise ValueError(f"{self.support} is not the neighbour of leaf {self.leaf}")
        if self.target == self.leaf or not tree.has_edge(self.support, self.target):
            raise ValueError(f"{self.target} is not adjacent to {self.support}")

    def inverse(self) -> "TranspositionMove":
        return TranspositionMove(self.leaf, self.target, self.support)


def count_inversions(code: str) -> int:
    """Number of pairs ``)`` ... ``(`` in a proper bracket structure.

    Accepts tree codes and concatenations of them (forests).
    """
    validate_code(code, allow_forest=True)
    closed = 0
    total = 0
    for ch in code:
        if ch == ")":
            closed += 1
        else:
            total += closed
    return total


def parity_rooted(tree: PlaneRootedTree) -> Parity:
    return Parity.of(count_inversions(encode_bracket(tree)))


def parity_free(tree: FreeTree) -> Parity:
    if tree.n % 2:
        raise OddVertexCountError(tree.n)
    return parity_rooted(free_to_plane(tree, 0))


def permute_level_one(tree: PlaneRootedTree, perm: Sequence[int]) -> PlaneRootedTree:
    """Reorder the root's subtrees: new position ``i`` holds old subtree ``perm[i]``."""
    kids = tree.children[tree.root]
    if sorted(perm) != list(range(len(kids))):
        raise ValueError(f"expected a permutation of {len(kids)} root subtrees, got {list(perm)}")
    children = list(tree.children)
    children[tree.root] = tuple(kids[i] for i in perm)
    return PlaneRootedTree(tree.n, tree.root, tuple(children))


def reroot_along_marked(tree: PlaneRootedTree) -> PlaneRootedTree:
    """Make the far end P of the marked edge the root, keeping the walk order.

    P keeps its own children and gains the old root O as its last child; O
    keeps the rest of its children.
    """
    kids = tree.children[tree.root]
    if not kids:
        raise ValueError("a single-vertex tree cannot be re-rooted")
    o, p = tree.root, kids[0]
    children = list(tree.children)
    children[p] = tree.children[p] + (o,)
    children[o] = kids[1:]
    return PlaneRootedTree(tree.n, p, tuple(children))


def marked_edge_forests(tree: PlaneRootedTree) -> tuple[str, str]:
    """Codes of forest A (below P) and forest B (the other root subtrees).

    With ``k, s`` and ``l, t`` the vertex and inversion counts of A and B,
    the tree has ``s + kl + l + t`` inversions and its re-rooting along the
    marked edge has ``s + k + kl + t``.
    """
    code = encode_bracket(tree)
    inner = code[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            first = inner[: i + 1]
            return first[1:-1], inner[i + 1 :]
    raise ValueError("a single-vertex tree has no marked edge")


def transposition_moves(tree: FreeTree) -> list[TranspositionMove]:
    """All valid transpositions of ``tree`` in a fixed order."""
    moves = []
    for b in tree.leaves():
        (a,) = tree.adjacency[b]
        for c in tree.adjacency[a]:
            if c != b:
                moves.append(TranspositionMove(b, a, c))
    return moves


def transpose(tree: FreeTree, move: TranspositionMove) -> FreeTree:
    move.check(tree)
    drop = (min(move.leaf, move.support), max(move.leaf, move.support))
    edges = tuple(e for e in tree.edges if e != drop) + ((move.target, move.leaf),)
    return FreeTree(tree.n, edges)


def apply_moves(tree: FreeTree, moves: Sequence[TranspositionMove]) -> FreeTree:
    for mv in moves:
        tree = transpose(tree, mv)
    return tree


def split_sum(tree: FreeTree, edge: tuple[int, int]) -> tuple[FreeTree, FreeTree]:
    """Delete ``edge`` and return the two components, relabelled 0.. in id order.

    The first component is the one containing ``edge[0]``.
    """
    u, v = edge
    if not tree.has_edge(u, v):
        raise ValueError(f"{edge} is not an edge of the tree")
    side = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if y not in side and not (x == u and y == v):
                side.add(y)
                stack.append(y)
    other = set(range(tree.n)) - side
    return _induced(tree, side), _induced(tree, other)


def _induced(tree: FreeTree, vertices: set[int]) -> FreeTree:
    ids = {v: i for i, v in enumerate(sorted(vertices))}
    edges = tuple((ids[a], ids[b]) for a, b in tree.edges if a in ids and b in ids)
    return FreeTree(len(ids), edges)


def join_sum(t1: PlaneRootedTree, t2: PlaneRootedTree) -> PlaneRootedTree:
    """Join t2's root to t1's root as its last child.

    The walk goes around t1 first, so the code is t1's code with t2's code
    spliced in before t1's final bracket.  With ``k, s`` and ``l, t`` the
    sizes and inversion counts of t1 and t2 the result has
    ``s + t + (k - 1) * l`` inversions.
    """
    c1, c2 = encode_bracket(t1), encode_bracket(t2)
    return decode_bracket(c1[:-1] + c2 + ")")


def _longest_path(tree: FreeTree) -> list[int]:
    def farthest(src: int) -> list[int]:
        prev = {src: -1}
        order = [src]
        for x in order:
            for y in tree.adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    order.append(y)
        node = order[-1]
        path = []
        while node != -1:
            path.append(node)
            node = prev[node]
        return path

    return farthest(farthest(0)[0])


def chain_reduction(tree: FreeTree) -> list[TranspositionMove]:
    """Transpositions turning ``tree`` into the chain on the same vertices.

    A path P = p0 .. pL is kept fixed; a leaf off P is walked one edge at a
    time towards p0 and finally hung beyond p0, which lengthens P by one.
    Not a shortest sequence.
    """
    if tree.n < 2:
        raise ValueError("chain reduction needs at least one edge")
    path = _longest_path(tree)
    moves: list[TranspositionMove] = []
    current = tree
    while len(path) < current.n:
        on_path = set(path)
        b = next(v for v in current.leaves() if v not in on_path)
        # walk towards p0 along the unique route support -> p0
        route = _route(current, current.adjacency[b][0], path[0])
        for a, c in zip(route, route[1:]):
            mv = TranspositionMove(b, a, c)
            moves.append(mv)
            current = transpose(current, mv)
        # b now hangs on p0 and extends the path
        path.insert(0, b)
    return moves


def _route(tree: FreeTree, src: int, dst: int) -> list[int]:
    prev = {src: -1}
    order = [src]
    for x in order:
        if x == dst:
            break
        for y in tree.adjacency[x]:
            if y not in prev:
                prev[y] = x
                order.append(y)
    out = []
    node = dst
    while node != -1:
        out.append(node)
        node = prev[node]
    return out[::-1]


def free_parity_via_moves(tree: FreeTree) -> Parity:
    """Parity from the length of a chain reduction (chains are even)."""
    if tree.n % 2:
        raise OddVertexCountError(tree.n)
    return Parity.of(len(chain_reduction(tree)))

