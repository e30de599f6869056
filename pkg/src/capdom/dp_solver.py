"""Exact capacitated domination by dynamic programming over a branch decomposition.

Tables are keyed by a boundary profile ``(f, g)``: two tuples aligned with the
cluster's sorted boundary, giving the exact capacity used (``f``) and demand
covered (``g``) at each boundary vertex. Only feasible profiles are stored; a
missing key means the restricted problem is infeasible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .assignment import Assignment
from .branch_decomp import BranchDecomposition, build_decomposition

Profile = tuple[tuple[int, ...], tuple[int, ...]]


class DpEntry:
    """Optimal restricted assignment for one (cluster, profile) index.

    Leaf entries hold their pairs; internal entries hold the two child entries
    whose union they are, and materialize the assignment on demand.
    """

    __slots__ = ("size", "pairs", "left", "right")

    def __init__(self, size: int, pairs=None, left=None, right=None):
        self.size = size
        self.pairs = pairs
        self.left = left
        self.right = right

    @property
    def assignment(self) -> Assignment:
        acc: Counter = Counter()
        stack = [self]
        while stack:
            e = stack.pop()
            if e.pairs is not None:
                acc.update(e.pairs)
            else:
                stack.append(e.right)
                stack.append(e.left)
        return Assignment(acc)

    def __repr__(self) -> str:
        return f"DpEntry(size={self.size})"


def leaf_entry(u: int, v: int, f: Sequence[int], g: Sequence[int]) -> dict | None:
    """Restricted assignment on the single edge ``uv``.

    ``f`` and ``g`` are ``(value at u, value at v)``. Returns a pair->multiplicity
    dict, or None when capacity used and demand covered cannot match.
    """
    fu, fv = f
    gu, gv = g
    if fu + fv != gu + gv:
        return None
    if fu + fv == 0:
        return {}
    if fv >= gv:
        raw = {(v, v): gv, (v, u): fv - gv, (u, u): fu}
    else:
        raw = {(u, u): gu, (u, v): fu - gu, (v, v): fv}
    return {p: k for p, k in raw.items() if k}


def compatible(
    parent: Mapping[int, tuple[int, int]],
    child1: Mapping[int, tuple[int, int]],
    child2: Mapping[int, tuple[int, int]],
    boundaries: tuple[Sequence[int], Sequence[int], Sequence[int]],
    d: Mapping[int, int],
    c: Mapping[int, int],
) -> bool:
    """Whether two child profiles join into the parent profile.

    Profiles map each boundary vertex to ``(f, g)``; ``boundaries`` lists the
    parent's then the two children's boundary vertices.
    """
    b0, b1, b2 = (set(b) for b in boundaries)
    for v in (b1 & b2) - b0:
        if child1[v][0] + child2[v][0] > c[v] or child1[v][1] + child2[v][1] != d[v]:
            return False
    for v in (b0 & b1) - b2:
        if parent[v] != child1[v]:
            return False
    for v in (b0 & b2) - b1:
        if parent[v] != child2[v]:
            return False
    for v in b0 & b1 & b2:
        if child1[v][0] + child2[v][0] != parent[v][0] or child1[v][1] + child2[v][1] != parent[v][1]:
            return False
    return True


def _leaf_table(edge, bnd, d, c) -> dict[Profile, DpEntry]:
    u, v = edge
    gu_range = range(d[u] + 1) if u in bnd else (d[u],)
    gv_range = range(d[v] + 1) if v in bnd else (d[v],)
    table: dict[Profile, DpEntry] = {}
    for fu, fv, gu, gv in product(range(c[u] + 1), range(c[v] + 1), gu_range, gv_range):
        pairs = leaf_entry(u, v, (fu, fv), (gu, gv))
        if pairs is None:
            continue
        fvals = {u: fu, v: fv}
        gvals = {u: gu, v: gv}
        key = (tuple(fvals[x] for x in bnd), tuple(gvals[x] for x in bnd))
        size = (fu > 0) + (fv > 0)
        old = table.get(key)
        if old is None or size < old.size:
            table[key] = DpEntry(size, pairs=pairs)
    return table


def combine(b0, b1, b2, t1, t2, d, c) -> dict[Profile, DpEntry]:
    """Fill the parent table from the two complete child tables."""
    pos1 = {v: i for i, v in enumerate(b1)}
    pos2 = {v: i for i, v in enumerate(b2)}
    s1, s2 = set(b1), set(b2)
    shared = [v for v in b1 if v in s2]
    forgotten = [v for v in shared if v not in b0]
    shared_idx = [(pos1[v], pos2[v]) for v in shared]
    forg_idx = [(pos1[v], pos2[v], c[v]) for v in forgotten]
    forg_d = [(pos1[v], d[v]) for v in forgotten]
    # Parent key assembly: (source, index1, index2, cap, dem) per parent boundary vertex.
    plan = []
    for v in b0:
        if v in s1 and v in s2:
            plan.append((0, pos1[v], pos2[v], c[v], d[v]))
        elif v in s1:
            plan.append((1, pos1[v], -1, 0, 0))
        else:
            plan.append((2, -1, pos2[v], 0, 0))

    buckets: dict[tuple[int, ...], list] = {}
    for (f2, g2), e2 in t2.items():
        buckets.setdefault(tuple(g2[pos2[v]] for v in forgotten), []).append((f2, g2, e2))

    out: dict[Profile, DpEntry] = {}
    for (f1, g1), e1 in t1.items():
        need = tuple(dv - g1[i1] for i1, dv in forg_d)
        for f2, g2, e2 in buckets.get(need, ()):
            if any(f1[i1] + f2[i2] > cv for i1, i2, cv in forg_idx):
                continue
            fk, gk = [], []
            ok = True
            for src, i1, i2, cv, dv in plan:
                if src == 0:
                    fv = f1[i1] + f2[i2]
                    gv = g1[i1] + g2[i2]
                    if fv > cv or gv > dv:
                        ok = False
                        break
                elif src == 1:
                    fv, gv = f1[i1], g1[i1]
                else:
                    fv, gv = f2[i2], g2[i2]
                fk.append(fv)
                gk.append(gv)
            if not ok:
                continue
            overlap = sum(1 for i1, i2 in shared_idx if f1[i1] and f2[i2])
            size = e1.size + e2.size - overlap
            key = (tuple(fk), tuple(gk))
            old = out.get(key)
            if old is None or size < old.size:
                out[key] = DpEntry(size, left=e1, right=e2)
    return out


def build_tables(view, bd: BranchDecomposition) -> dict[int, dict[Profile, DpEntry]]:
    """Complete DP tables for every cluster, children before parents."""
    d, c = view.d, view.c
    tables: dict[int, dict[Profile, DpEntry]] = {}
    for nid in bd.postorder():
        nd = bd.nodes[nid]
        if nd.is_leaf:
            (edge,) = nd.edges
            tables[nid] = _leaf_table(edge, nd.boundary, d, c)
        else:
            a, b = nd.children
            tables[nid] = combine(
                nd.boundary, bd.nodes[a].boundary, bd.nodes[b].boundary, tables[a], tables[b], d, c
            )
    return tables


@dataclass(frozen=True)
class DpSolution:
    assignment: Assignment | None
    width: int
    max_table: int


def solve_dp(view, bd: BranchDecomposition | None = None) -> DpSolution:
    """Optimal proper covering assignment on ``view`` (an Instance or SubgraphView).

    Vertices without incident edges sit outside the decomposition: each covers
    its own demand if it can, otherwise the whole view is infeasible.
    """
    d, c = view.d, view.c
    touched = {x for e in view.edges for x in e}
    pairs: dict = {}
    for v in view.vertices:
        if v in touched or d[v] == 0:
            continue
        if d[v] > c[v]:
            return DpSolution(None, 0, 0)
        pairs[(v, v)] = d[v]
    isolated = Assignment(pairs)
    if not view.edges:
        return DpSolution(isolated, 0, 0)
    if bd is None:
        bd = build_decomposition(view)
    tables = build_tables(view, bd)
    max_table = max(len(t) for t in tables.values())
    root = tables[bd.root].get(((), ()))
    if root is None:
        return DpSolution(None, bd.width, max_table)
    return DpSolution(root.assignment + isolated, bd.width, max_table)


def cdp_dp(view, bd: BranchDecomposition | None = None) -> Assignment | None:
    """Exact optimum for ``view``, or None when it admits no proper covering assignment."""
    return solve_dp(view, bd).assignment
