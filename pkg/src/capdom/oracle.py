"""Brute-force ground truth for small instances."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .assignment import Assignment
from .feasibility import max_coverage
from .graph_core import Edge, Instance, PlanarGraph

DEFAULT_LIMIT = 16


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    opt_size: int | None = None
    witness: Assignment | None = None


def brute_force_cdp(
    inst: Instance, size_cap: int | None = None, limit: int = DEFAULT_LIMIT
) -> OracleResult:
    """Smallest facility set that can cover all demand, by enumeration.

    Facility sets are tried by (cardinality, lexicographic order). Zero-capacity
    vertices are never useful facilities and are skipped. With ``size_cap``
    the search stops after that cardinality and reports infeasible if nothing
    fits, which is enough for bound checks.
    """
    if inst.n > limit:
        raise ValueError(
            f"brute force is limited to {limit} vertices (got {inst.n}); use the DP or PTAS solver"
        )
    total = inst.total_demand
    if total == 0:
        return OracleResult(True, 0, Assignment())
    candidates = [v for v in inst.vertices if inst.c[v] > 0]
    value, _ = max_coverage(inst, candidates)
    if value < total:
        return OracleResult(False)
    top = len(candidates) if size_cap is None else min(size_cap, len(candidates))
    for r in range(1, top + 1):
        for S in combinations(candidates, r):
            if sum(inst.c[v] for v in S) < total:
                continue
            value, witness = max_coverage(inst, S)
            if value == total:
                return OracleResult(True, r, witness)
    return OracleResult(False)


def _cvcp_coverage(g: PlanarGraph, edge_demand: dict[Edge, int], c, S) -> int:
    edges = [e for e in g.edges if edge_demand.get(e, 0) > 0]
    S = sorted(S)
    pos = {u: 1 + i for i, u in enumerate(S)}
    e0 = 1 + len(S)
    sink = e0 + len(edges)
    tails, heads, caps = [], [], []
    for u in S:
        tails.append(0)
        heads.append(pos[u])
        caps.append(c[u])
    for j, (u, v) in enumerate(edges):
        for x in (u, v):
            if x in pos:
                tails.append(pos[x])
                heads.append(e0 + j)
                caps.append(c[x])
        tails.append(e0 + j)
        heads.append(sink)
        caps.append(edge_demand[(u, v)])
    n = sink + 1
    m = csr_matrix(
        (np.asarray(caps, np.int32), (np.asarray(tails, np.int32), np.asarray(heads, np.int32))),
        shape=(n, n),
        dtype=np.int32,
    )
    return int(maximum_flow(m, 0, sink, method="dinic").flow_value)


def brute_force_cvcp(
    g: PlanarGraph, edge_demands: dict[Edge, int], c, limit: int = DEFAULT_LIMIT
) -> OracleResult:
    """Smallest vertex set whose capacities can serve every edge's demand from its endpoints.

    The witness is left as None; only the optimum size is needed downstream.
    """
    if g.n > limit:
        raise ValueError(f"brute force is limited to {limit} vertices (got {g.n})")
    total = sum(edge_demands.get(e, 0) for e in g.edges)
    if total == 0:
        return OracleResult(True, 0, None)
    candidates = [v for v in g.vertices if c[v] > 0]
    if _cvcp_coverage(g, edge_demands, c, candidates) < total:
        return OracleResult(False)
    for r in range(1, len(candidates) + 1):
        for S in combinations(candidates, r):
            if _cvcp_coverage(g, edge_demands, c, S) == total:
                return OracleResult(True, r, None)
    return OracleResult(False)
