"""Branch decompositions: construction, boundaries and validation.

The builder is a heuristic, not the optimal planar algorithm. It grows a
linear edge order greedily (each step adds the edge whose inclusion leaves
the smallest boundary) and hangs it on a caterpillar tree, so every internal
node joins one large cluster with a single edge. That shape also keeps the
dynamic program cheap, since one side of every join is a leaf table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph_core import Edge


@dataclass(frozen=True)
class Node:
    id: int
    edges: frozenset[Edge]
    children: tuple[int, ...]
    boundary: tuple[int, ...]

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class BranchDecomposition:
    edges: tuple[Edge, ...]
    nodes: tuple[Node, ...]
    root: int

    @property
    def width(self) -> int:
        return max(len(nd.boundary) for nd in self.nodes)

    def boundary(self, node: int) -> tuple[int, ...]:
        return self.nodes[node].boundary

    def leaves(self) -> list[Node]:
        return [nd for nd in self.nodes if nd.is_leaf]

    def postorder(self) -> list[int]:
        order, stack = [], [(self.root, False)]
        while stack:
            nid, done = stack.pop()
            if done:
                order.append(nid)
                continue
            stack.append((nid, True))
            for ch in reversed(self.nodes[nid].children):
                stack.append((ch, False))
        return order

    def dump(self) -> str:
        """Indented text rendering of the tree, root first."""
        lines = []
        stack = [(self.root, 0)]
        while stack:
            nid, depth = stack.pop()
            nd = self.nodes[nid]
            label = f"edge {min(nd.edges)}" if nd.is_leaf else f"{len(nd.edges)} edges"
            lines.append(f"{'  ' * depth}[{nid}] {label} boundary={list(nd.boundary)}")
            stack.extend((ch, depth + 1) for ch in reversed(nd.children))
        return "\n".join(lines)


def _edges_of(g) -> tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(e)) for e in (g.edges if hasattr(g, "edges") else g)))


def cluster_boundary(cluster: Iterable[Edge], all_edges: Sequence[Edge]) -> tuple[int, ...]:
    """Vertices incident to edges both inside and outside ``cluster``."""
    cluster = set(cluster)
    inside = {x for e in cluster for x in e}
    outside = {x for e in all_edges if e not in cluster for x in e}
    return tuple(sorted(inside & outside))


def greedy_edge_order(edges: Sequence[Edge], start: int = 0) -> tuple[list[Edge], int]:
    """Greedy order starting at ``edges[start]``; returns (order, max prefix boundary)."""
    deg = Counter(x for e in edges for x in e)
    remaining = list(edges)
    used_deg: Counter[int] = Counter()
    order: list[Edge] = []
    boundary: set[int] = set()
    worst = 0
    first = remaining.pop(start)
    pending = [first]
    while True:
        e = pending.pop()
        order.append(e)
        for x in e:
            used_deg[x] += 1
            if used_deg[x] == deg[x]:
                boundary.discard(x)
            else:
                boundary.add(x)
        if len(order) < len(edges):
            worst = max(worst, len(boundary))
        if not remaining:
            break
        best_idx, best_key = 0, None
        for idx, (u, v) in enumerate(remaining):
            size = len(boundary)
            touches = 0
            for x in (u, v):
                inside = x in boundary
                if inside:
                    touches += 1
                closes = used_deg[x] + 1 == deg[x]
                if inside and closes:
                    size -= 1
                elif not inside and not closes:
                    size += 1
            key = (size, -touches, idx)
            if best_key is None or key < best_key:
                best_idx, best_key = idx, key
        pending.append(remaining.pop(best_idx))
    return order, worst


def _caterpillar(order: Sequence[Edge], all_edges: Sequence[Edge]) -> BranchDecomposition:
    nodes: list[Node] = []

    def add(edges: frozenset[Edge], children: tuple[int, ...]) -> int:
        nid = len(nodes)
        nodes.append(Node(nid, edges, children, cluster_boundary(edges, all_edges)))
        return nid

    acc = add(frozenset([order[0]]), ())
    for e in order[1:]:
        leaf = add(frozenset([e]), ())
        acc = add(nodes[acc].edges | {e}, (acc, leaf))
    return BranchDecomposition(tuple(all_edges), tuple(nodes), acc)


def build_decomposition(g, max_starts: int = 32) -> BranchDecomposition:
    """Heuristic branch decomposition of a graph (or any object with ``.edges``).

    Disconnected edge sets are allowed. Several greedy starts are tried and the
    narrowest order wins, ties going to the lowest start index.
    """
    edges = _edges_of(g)
    if not edges:
        raise ValueError("cannot decompose an edgeless graph")
    if len(edges) <= max_starts:
        starts = range(len(edges))
    else:
        step = len(edges) / max_starts
        starts = sorted({int(s * step) for s in range(max_starts)})
    best = None
    for s in starts:
        order, w = greedy_edge_order(edges, s)
        if best is None or w < best[1]:
            best = (order, w)
    return _caterpillar(best[0], edges)


def width(bd: BranchDecomposition) -> int:
    return bd.width


def boundary(bd: BranchDecomposition, node: int) -> tuple[int, ...]:
    return bd.boundary(node)


def validate(bd: BranchDecomposition, g=None) -> tuple[bool, str]:
    """Recheck structure and boundaries from scratch; returns (ok, diagnostic)."""
    edges = _edges_of(g) if g is not None else tuple(sorted(bd.edges))
    if tuple(sorted(bd.edges)) != edges:
        return False, "decomposition edge set differs from graph edge set"
    if not 0 <= bd.root < len(bd.nodes):
        return False, "root id out of range"
    seen_nodes: set[int] = set()
    leaf_edges: list[Edge] = []
    stack = [bd.root]
    while stack:
        nid = stack.pop()
        if nid in seen_nodes:
            return False, f"node {nid} reached twice"
        seen_nodes.add(nid)
        nd = bd.nodes[nid]
        if nd.id != nid:
            return False, f"node {nid} carries id {nd.id}"
        if nd.is_leaf:
            if len(nd.edges) != 1:
                return False, f"leaf {nid} holds {len(nd.edges)} edges"
            leaf_edges.extend(nd.edges)
        else:
            if len(nd.children) != 2:
                return False, f"internal node {nid} has {len(nd.children)} children"
            a, b = (bd.nodes[ch].edges for ch in nd.children)
            if a & b:
                return False, f"children of node {nid} share edges"
            if a | b != nd.edges:
                return False, f"node {nid} cluster is not the union of its children"
            stack.extend(nd.children)
        if nd.boundary != cluster_boundary(nd.edges, edges):
            return False, f"node {nid} boundary {nd.boundary} is wrong"
    if len(seen_nodes) != len(bd.nodes):
        return False, "unreachable nodes present"
    if sorted(leaf_edges) != list(edges):
        return False, "leaves are not in bijection with edges"
    if bd.nodes[bd.root].edges != frozenset(edges):
        return False, "root cluster is not the full edge set"
    return True, "ok"
