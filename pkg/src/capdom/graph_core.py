"""Graph and instance types, BFS leveling, and slab/patch views."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PlanarGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    Planarity is not checked. The PTAS guarantee only holds when the
    graph really is planar; everything else works on any simple graph.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "PlanarGraph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = _norm_edge(u, v)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted((v, *self.adjacency[v])))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Instance:
    """A CDP instance: graph plus integer demand ``d`` and capacity ``c``."""

    graph: PlanarGraph
    d: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.graph.n
        if len(self.d) != n or len(self.c) != n:
            raise ValueError("demand and capacity must be given for every vertex")
        if any(x < 0 for x in self.d) or any(x < 0 for x in self.c):
            raise ValueError("demands and capacities must be nonnegative")

    @classmethod
    def build(
        cls, n: int, edges: Iterable[Sequence[int]], d: Sequence[int], c: Sequence[int]
    ) -> "Instance":
        return cls(PlanarGraph.from_edges(n, edges), tuple(map(int, d)), tuple(map(int, c)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def vertices(self) -> range:
        return self.graph.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @cached_property
    def d_star(self) -> int:
        return max(self.d, default=0)

    @cached_property
    def c_star(self) -> int:
        return max(self.c, default=0)

    @cached_property
    def total_demand(self) -> int:
        return sum(self.d)


@dataclass(frozen=True)
class Levels:
    root: int
    level_of: tuple[int, ...]

    @property
    def m(self) -> int:
        return 1 + max(self.level_of)

    def vertices_at(self, level: int) -> list[int]:
        return [v for v, lv in enumerate(self.level_of) if lv == level]


def bfs_levels(inst: Instance | PlanarGraph, root: int) -> Levels:
    """Hop distance from ``root``; raises if some vertex is unreachable."""
    g = inst.graph if isinstance(inst, Instance) else inst
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} is not a vertex")
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    for v, dv in enumerate(dist):
        if dv < 0:
            raise ValueError(f"graph is disconnected: vertex {v} is unreachable from root {root}")
    return Levels(root, tuple(dist))


@dataclass(frozen=True)
class SubgraphView:
    """Induced subgraph over a level range, keeping parent vertex ids.

    Vertices on ``zero_demand_levels`` keep their capacity but their demand
    reads as zero through ``d``.
    """

    parent: Instance
    level_lo: int
    level_hi: int
    zero_demand_levels: frozenset[int]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    d: Mapping[int, int] = field(repr=False, compare=False)
    c: Mapping[int, int] = field(repr=False, compare=False)

    @classmethod
    def over_levels(
        cls, inst: Instance, levels: Levels, lo: int, hi: int, masked: Iterable[int] = ()
    ) -> "SubgraphView":
        masked = frozenset(lv for lv in masked if lo <= lv <= hi)
        verts = tuple(v for v in inst.vertices if lo <= levels.level_of[v] <= hi)
        inside = set(verts)
        edges = tuple(e for e in inst.edges if e[0] in inside and e[1] in inside)
        d = {v: 0 if levels.level_of[v] in masked else inst.d[v] for v in verts}
        c = {v: inst.c[v] for v in verts}
        return cls(inst, lo, hi, masked, verts, edges, d, c)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def interface_levels(m: int, k: int, i: int) -> list[int]:
    """Levels L = jk+i with 0 < L < m, i.e. tops of slabs that have a slab above."""
    return [lv for lv in range(i, m, k) if lv > 0]


def slab_indices(m: int, k: int, i: int) -> list[int]:
    """Indices j of the nonempty slabs for shift ``i``; ``j = -1`` is the
    partial slab above level ``i`` when ``i > 0``."""
    first = -1 if i > 0 else 0
    return [j for j in range(first, m // k + 1) if j * k + i <= m - 1]


def patch_indices(m: int, k: int, i: int) -> list[int]:
    """Indices l of patches, one per interface between consecutive slabs."""
    return [(lv - i) // k - 1 for lv in interface_levels(m, k, i)]


def _check_shift(k: int, i: int) -> None:
    if k < 1:
        raise ValueError("slab height k must be positive")
    if not 0 <= i < k:
        raise ValueError(f"shift i={i} must satisfy 0 <= i < k={k}")


def extract_slab(inst: Instance, levels: Levels, i: int, j: int, k: int) -> SubgraphView:
    """Slab ``j`` for shift ``i``: levels ``jk+i .. (j+1)k+i-1`` clipped to the graph.

    The top level is masked unless no slab lies above it, and the bottom level
    is masked unless no slab lies below it.
    """
    _check_shift(k, i)
    m = levels.m
    lo_raw, hi_raw = j * k + i, (j + 1) * k + i - 1
    if j < -1 or (j == -1 and i == 0) or j > m // k:
        raise ValueError(f"slab index j={j} out of range for m={m}, k={k}, i={i}")
    lo, hi = max(lo_raw, 0), min(hi_raw, m - 1)
    if lo > hi:
        raise ValueError(f"slab j={j} is empty after clipping to levels 0..{m - 1}")
    masked = set()
    if lo_raw > 0:
        masked.add(lo_raw)
    if hi_raw < m - 1:
        masked.add(hi_raw)
    return SubgraphView.over_levels(inst, levels, lo, hi, masked)


def extract_patch(inst: Instance, levels: Levels, i: int, l: int, k: int) -> SubgraphView:
    """Patch ``l``: levels ``(l+1)k+i-2 .. (l+1)k+i+1`` with both outer levels masked."""
    _check_shift(k, i)
    m = levels.m
    lo_raw = (l + 1) * k + i - 2
    hi_raw = lo_raw + 3
    lo, hi = max(lo_raw, 0), min(hi_raw, m - 1)
    if lo > hi:
        raise ValueError(f"patch l={l} does not intersect levels 0..{m - 1}")
    return SubgraphView.over_levels(inst, levels, lo, hi, {lo_raw, hi_raw})


def cut_edges(g: PlanarGraph, S: Iterable[int]) -> set[Edge]:
    """Edges with exactly one endpoint in ``S``."""
    S = set(S)
    return {e for e in g.edges if (e[0] in S) != (e[1] in S)}


def boundary_vertices(g: PlanarGraph, S: Iterable[int]) -> set[int]:
    """Vertices of ``S`` incident to a cut edge of ``S``."""
    S = set(S)
    out = set()
    for u, v in cut_edges(g, S):
        out.add(u if u in S else v)
    return out
