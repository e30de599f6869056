"""Capacitated vertex cover through edge subdivision."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .assignment import Assignment
from .graph_core import Edge, Instance, PlanarGraph
from .ptas import PtasConfig, solve_ptas


@dataclass(frozen=True)
class VcInstance:
    graph: PlanarGraph
    edge_demand: Mapping[Edge, int]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.graph.n:
            raise ValueError("capacity must be given for every vertex")
        for e, k in self.edge_demand.items():
            if k < 0:
                raise ValueError(f"negative demand on edge {e}")
            if tuple(sorted(e)) not in set(self.graph.edges):
                raise ValueError(f"demand given for non-edge {e}")

    @classmethod
    def build(cls, n: int, edges: Sequence[tuple[int, int, int]], c: Sequence[int]) -> "VcInstance":
        g = PlanarGraph.from_edges(n, [(u, v) for u, v, _ in edges])
        dem = {tuple(sorted((u, v))): int(k) for u, v, k in edges}
        return cls(g, dem, tuple(map(int, c)))

    def demand(self, e: Edge) -> int:
        return self.edge_demand.get(tuple(sorted(e)), 0)

    @property
    def d_star(self) -> int:
        return max((self.demand(e) for e in self.graph.edges), default=0)

    @property
    def c_star(self) -> int:
        return max(self.c, default=0)


def reduce_to_cdp(vc: VcInstance) -> tuple[Instance, dict[Edge, int]]:
    """Subdivide each edge ``uv`` with a zero-capacity vertex carrying the edge demand.

    Returns the CDP instance and the map from original edge to its new vertex.
    """
    g = vc.graph
    n = g.n
    bisector: dict[Edge, int] = {}
    edges = []
    d = [0] * n
    c = list(vc.c)
    for e in g.edges:
        w = n + len(bisector)
        bisector[e] = w
        edges += [(e[0], w), (w, e[1])]
        d.append(vc.demand(e))
        c.append(0)
    return Instance.build(n + len(bisector), edges, d, c), bisector


@dataclass(frozen=True)
class CvcpSolution:
    cover: frozenset[int]
    coverage: dict[tuple[int, Edge], int]

    @property
    def size(self) -> int:
        return len(self.cover)


def map_back(assignment: Assignment, bisector: Mapping[Edge, int]) -> CvcpSolution:
    """Translate a CDP assignment on the subdivided graph to edge coverage."""
    edge_of = {w: e for e, w in bisector.items()}
    coverage: dict[tuple[int, Edge], int] = {}
    for (u, v), k in assignment.items():
        if u in edge_of:
            raise ValueError(f"subdivision vertex {u} was used as a facility")
        if v in edge_of:
            coverage[(u, edge_of[v])] = coverage.get((u, edge_of[v]), 0) + k
    return CvcpSolution(frozenset(u for u, _ in coverage), coverage)


def solve_cvcp(vc: VcInstance, cfg: PtasConfig) -> CvcpSolution | None:
    """Approximate capacitated vertex cover, or None when infeasible."""
    inst, bisector = reduce_to_cdp(vc)
    res = solve_ptas(inst, cfg)
    if res.assignment is None:
        return None
    return map_back(res.assignment, bisector)
