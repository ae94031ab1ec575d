"""The graph of trees G_n, planarity, and its DOT/JSON exports.

Vertices of G_n are the isomorphism classes of n-vertex trees (n even),
ordered by canonical key; two classes are adjacent when one transposition
takes a tree of one class to a tree of the other.  Because a transposition
flips parity, parity colours G_n properly.

Planarity is decided by networkx's left-right planarity test.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .parity import OddVertexCountError, Parity, parity_free, transpose, transposition_moves
from .trees import (
    DEFAULT_ENUMERATION_CEILING,
    FreeTree,
    canonical_key,
    decode_bracket,
    enumerate_free_tree_keys,
    plane_to_free,
)

__all__ = [
    "TreeNode",
    "TreeGraph",
    "build_tree_graph",
    "check_bipartite_by_parity",
    "has_odd_cycle",
    "planarity",
    "planar_embedding",
    "count_faces",
    "move_distance",
    "export",
    "to_dot",
    "to_json",
    "from_json",
]


@dataclass(frozen=True)
class TreeNode:
    key: str
    tree: FreeTree
    parity: Parity


@dataclass(frozen=True)
class TreeGraph:
    n: int
    nodes: tuple[TreeNode, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted({(min(a, b), max(a, b)) for a, b in self.edges}))
        object.__setattr__(self, "edges", edges)
        if any(a == b for a, b in edges):
            raise ValueError("graph of trees has a self-loop")
        if any(not 0 <= a < len(self.nodes) or not 0 <= b < len(self.nodes) for a, b in edges):
            raise ValueError("edge endpoint out of range")

    def index(self, key: str) -> int:
        return self._index[key]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {node.key: i for i, node in enumerate(self.nodes)}

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def stats(self) -> dict:
        return {
            "n": self.n,
            "nodes": len(self.nodes),
            "edges": len(self.edges),
            "bipartite": check_bipartite_by_parity(self),
            "planar": planarity(self),
        }


def build_tree_graph(n: int, *, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> TreeGraph:
    if n % 2:
        raise OddVertexCountError(n)
    keys = enumerate_free_tree_keys(n, ceiling=ceiling)
    index = {k: i for i, k in enumerate(keys)}
    nodes = []
    edges = set()
    for i, key in enumerate(keys):
        tree = plane_to_free(decode_bracket(key))
        nodes.append(TreeNode(key, tree, parity_free(tree)))
        for move in transposition_moves(tree):
            j = index[canonical_key(transpose(tree, move))]
            if i == j:
                raise AssertionError(f"transposition of {key} stayed in its class")
            edges.add((min(i, j), max(i, j)))
    return TreeGraph(n, tuple(nodes), tuple(edges))


def check_bipartite_by_parity(g: TreeGraph) -> bool:
    return all(g.nodes[a].parity is not g.nodes[b].parity for a, b in g.edges)


def has_odd_cycle(num_vertices: int, edges: Iterable[Sequence[int]]) -> bool:
    """BFS 2-colouring; independent of any parity labels."""
    adj: list[list[int]] = [[] for _ in range(num_vertices)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    side = [-1] * num_vertices
    for s in range(num_vertices):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return True
    return False


def _as_nx(graph) -> nx.Graph:
    if isinstance(graph, TreeGraph):
        g = nx.Graph()
        g.add_nodes_from(range(len(graph.nodes)))
        g.add_edges_from(graph.edges)
        return g
    if isinstance(graph, nx.Graph):
        return graph
    num_vertices, edges = graph
    g = nx.Graph()
    g.add_nodes_from(range(num_vertices))
    g.add_edges_from(edges)
    return g


def planarity(graph) -> bool:
    """Planarity of a TreeGraph, a networkx graph, or a ``(num_vertices, edges)`` pair."""
    ok, _ = nx.check_planarity(_as_nx(graph))
    return ok


def planar_embedding(graph) -> dict[int, list[int]] | None:
    """Rotation system (clockwise neighbour order per vertex), or None if not planar."""
    ok, emb = nx.check_planarity(_as_nx(graph))
    if not ok:
        return None
    return {v: list(emb.neighbors_cw_order(v)) for v in emb.nodes}


def count_faces(rotation: dict[int, list[int]]) -> int:
    """Number of faces traced by a rotation system, summed over components.

    Isolated vertices count one face each.
    """
    position = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = 0
    for v, nbrs in rotation.items():
        if not nbrs:
            faces += 1
        for w in nbrs:
            if (v, w) in seen:
                continue
            faces += 1
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                ring = rotation[b]
                a, b = b, ring[(position[b][a] + 1) % len(ring)]
    return faces


def move_distance(g: TreeGraph, source: str, target: str) -> int | None:
    """Fewest transpositions between two classes, by BFS over G_n."""
    adj = g.adjacency()
    start, goal = g.index(source), g.index(target)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            return dist[x]
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


# ---------------------------------------------------------------------------
# export


def to_dot(g: TreeGraph) -> str:
    lines = [f"graph G{g.n} {{", "  node [style=filled];"]
    for i, node in enumerate(g.nodes):
        fill = "white" if node.parity is Parity.EVEN else "gray"
        lines.append(f'  {i} [fillcolor={fill},label="{node.key}"];')
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: TreeGraph) -> dict:
    return {
        "n": g.n,
        "nodes": [{"id": i, "code": node.key, "parity": str(node.parity)} for i, node in enumerate(g.nodes)],
        "edges": [list(e) for e in g.edges],
    }


def from_json(data: dict | str) -> TreeGraph:
    if isinstance(data, str):
        data = json.loads(data)
    records = sorted(data["nodes"], key=lambda r: r["id"])
    if [r["id"] for r in records] != list(range(len(records))):
        raise ValueError("node ids must be 0..N-1")
    nodes = tuple(
        TreeNode(r["code"], plane_to_free(decode_bracket(r["code"])), Parity(r["parity"])) for r in records
    )
    return TreeGraph(int(data["n"]), nodes, tuple((int(a), int(b)) for a, b in data["edges"]))


def export(g: TreeGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(g).encode()
    if fmt == "json":
        return (json.dumps(to_json(g), indent=2) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r} (expected 'dot' or 'json')")
