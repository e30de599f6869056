"""Solver-independent checking of result documents.

Works on the raw JSON records and the parsed instance only; it does not use
the Assignment type or any solver code.
"""

from __future__ import annotations

from .cvcp import VcInstance
from .graph_core import Instance


def verify_cdp(inst: Instance, doc: dict) -> list[str]:
    n = inst.graph.n
    adj = [set() for _ in range(n)]
    for u, v in inst.graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    out = [0] * n
    got = [0] * n
    errors = []
    facilities = set()
    for rec in doc.get("assignment", []):
        u, v, k = rec["facility"] - 1, rec["client"] - 1, rec["mult"]
        if not (0 <= u < n and 0 <= v < n):
            errors.append(f"pair ({u + 1},{v + 1}) names a vertex outside 1..{n}")
            continue
        if k <= 0:
            errors.append(f"pair ({u + 1},{v + 1}) has nonpositive multiplicity {k}")
            continue
        if u != v and v not in adj[u]:
            errors.append(f"pair ({u + 1},{v + 1}) is not along an edge")
        out[u] += k
        got[v] += k
        facilities.add(u)
    for u in range(n):
        if out[u] > inst.c[u]:
            errors.append(f"vertex {u + 1} serves {out[u]}, capacity {inst.c[u]}")
    for v in range(n):
        if got[v] != inst.d[v]:
            errors.append(f"vertex {v + 1} receives {got[v]}, demand {inst.d[v]}")
    if doc.get("feasible") and doc.get("size") != len(facilities):
        errors.append(f"reported size {doc.get('size')} but {len(facilities)} facilities used")
    if doc.get("feasible") and sorted(doc.get("dominating_set", [])) != sorted(u + 1 for u in facilities):
        errors.append("reported dominating set does not match the assignment")
    return errors


def verify_cvcp(vc: VcInstance, doc: dict) -> list[str]:
    g = vc.graph
    edges = set(g.edges)
    out = [0] * g.n
    got = {e: 0 for e in g.edges}
    errors = []
    facilities = set()
    for rec in doc.get("assignment", []):
        u = rec["facility"] - 1
        a, b = sorted(x - 1 for x in rec["edge"])
        k = rec["mult"]
        if (a, b) not in edges:
            errors.append(f"edge ({a + 1},{b + 1}) is not in the graph")
            continue
        if u not in (a, b):
            errors.append(f"vertex {u + 1} is not an endpoint of edge ({a + 1},{b + 1})")
            continue
        out[u] += k
        got[(a, b)] += k
        facilities.add(u)
    for u in g.vertices:
        if out[u] > vc.c[u]:
            errors.append(f"vertex {u + 1} serves {out[u]}, capacity {vc.c[u]}")
    for e, k in got.items():
        if k != vc.demand(e):
            errors.append(f"edge ({e[0] + 1},{e[1] + 1}) receives {k}, demand {vc.demand(e)}")
    if doc.get("feasible") and doc.get("size") != len(facilities):
        errors.append(f"reported size {doc.get('size')} but {len(facilities)} facilities used")
    return errors


def verify(inst: Instance | VcInstance, doc: dict) -> list[str]:
    """All violated constraints; an empty list means the result checks out."""
    if not doc.get("feasible"):
        return ["result claims the instance is infeasible; nothing to check"]
    if isinstance(inst, VcInstance):
        return verify_cvcp(inst, doc)
    return verify_cdp(inst, doc)
