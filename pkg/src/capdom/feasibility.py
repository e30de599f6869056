"""Feasibility checks: cut condition, max-flow coverage, capacity normalization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .assignment import Assignment
from .graph_core import Instance, boundary_vertices


@dataclass(frozen=True)
class FlowNetwork:
    """source -> facility (cap c(u)) -> client in N[u] (cap c(u)) -> sink (cap d(v)).

    Node numbering: 0 is the source, facilities follow in sorted order, then
    every vertex as a client, then the sink.
    """

    facilities: tuple[int, ...]
    clients: tuple[int, ...]
    tails: np.ndarray
    heads: np.ndarray
    caps: np.ndarray

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return 1 + len(self.facilities) + len(self.clients)

    @property
    def num_nodes(self) -> int:
        return self.sink + 1


def build_network(inst: Instance, S: Iterable[int]) -> FlowNetwork:
    facilities = tuple(sorted(set(S)))
    clients = tuple(inst.vertices)
    f0 = 1
    c0 = 1 + len(facilities)
    sink = c0 + len(clients)
    tails, heads, caps = [], [], []
    for idx, u in enumerate(facilities):
        tails.append(0)
        heads.append(f0 + idx)
        caps.append(inst.c[u])
        for v in inst.graph.closed_neighborhood(u):
            tails.append(f0 + idx)
            heads.append(c0 + v)
            caps.append(inst.c[u])
    for v in clients:
        tails.append(c0 + v)
        heads.append(sink)
        caps.append(inst.d[v])
    return FlowNetwork(
        facilities,
        clients,
        np.asarray(tails, dtype=np.int32),
        np.asarray(heads, dtype=np.int32),
        np.asarray(caps, dtype=np.int32),
    )


def max_coverage(inst: Instance, S: Iterable[int]) -> tuple[int, Assignment]:
    """Most demand that facilities in ``S`` can cover, with a witness assignment."""
    net = build_network(inst, S)
    if not net.facilities or inst.total_demand == 0:
        return 0, Assignment()
    n = net.num_nodes
    graph = csr_matrix((net.caps, (net.tails, net.heads)), shape=(n, n), dtype=np.int32)
    res = maximum_flow(graph, net.source, net.sink, method="dinic")
    flow = res.flow.tocsr()
    c0 = 1 + len(net.facilities)
    pairs = {}
    for idx, u in enumerate(net.facilities):
        row = 1 + idx
        start, stop = flow.indptr[row], flow.indptr[row + 1]
        for col, val in zip(flow.indices[start:stop], flow.data[start:stop]):
            if val > 0 and col >= c0 and col < net.sink:
                pairs[(u, int(col) - c0)] = int(val)
    return int(res.flow_value), Assignment(pairs)


def is_instance_feasible(inst: Instance) -> bool:
    value, _ = max_coverage(inst, inst.vertices)
    return value == inst.total_demand


def check_cut_condition(inst: Instance, R: Iterable[int]) -> bool:
    """Necessary condition ``c(R) + d(boundary(R)) >= d(R)``; False proves infeasibility."""
    R = set(R)
    cap = sum(inst.c[v] for v in R)
    dem = sum(inst.d[v] for v in R)
    bdem = sum(inst.d[v] for v in boundary_vertices(inst.graph, R))
    return cap + bdem >= dem


class InfeasibleInstance(ValueError):
    """Some vertex demands more than its closed neighborhood can supply."""

    def __init__(self, vertices: list[int]):
        self.vertices = vertices
        super().__init__(f"demand exceeds closed-neighborhood capacity at vertices {vertices}")


def normalize_instance(inst: Instance) -> Instance:
    """Clamp each capacity to the demand of its closed neighborhood.

    Raises :class:`InfeasibleInstance` when some ``d(v)`` exceeds the total
    capacity of ``N[v]``. The optimum is unchanged by the clamp.
    """
    g = inst.graph
    bad = [v for v in inst.vertices if inst.d[v] > sum(inst.c[u] for u in g.closed_neighborhood(v))]
    if bad:
        raise InfeasibleInstance(bad)
    c = tuple(min(inst.c[v], sum(inst.d[u] for u in g.closed_neighborhood(v))) for v in inst.vertices)
    if c == inst.c:
        return inst
    return Instance(g, inst.d, c)
