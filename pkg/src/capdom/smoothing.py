"""Turn an overloaded or non-covering assignment into a proper covering one.

Overloads are trimmed first. Remaining unmet demand is then pushed, one
unit at a time, along semi-alternating paths: walks that alternate between a
free step (the next vertex will serve the current one) and an existing
assignment arc (which gets dropped), ending at a vertex with spare capacity.
Each step covers one more unit and adds at most one new facility.
"""

from __future__ import annotations

from collections import Counter, deque

from .assignment import Assignment, unmet_demand
from .graph_core import Instance


def _pick(cands: dict) -> tuple:
    # largest multiplicity first, then lexicographically smallest pair
    return min(cands.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def remove_overloads(a: Assignment, inst: Instance) -> Assignment:
    """Drop pairs until no facility exceeds capacity and no client exceeds demand."""
    mult = Counter(dict(a.items()))
    out, inc = Counter(), Counter()
    for (u, v), k in mult.items():
        out[u] += k
        inc[v] += k
    changed = False
    for u in sorted(out):
        while out[u] > inst.c[u]:
            p = _pick({q: k for q, k in mult.items() if q[0] == u and k > 0})
            mult[p] -= 1
            out[u] -= 1
            inc[p[1]] -= 1
            changed = True
    for v in sorted(inc):
        while inc[v] > inst.d[v]:
            p = _pick({q: k for q, k in mult.items() if q[1] == v and k > 0})
            mult[p] -= 1
            out[p[0]] -= 1
            inc[v] -= 1
            changed = True
    return Assignment(+mult) if changed else a


def _redirect_unmet(mult: Counter, inst: Instance) -> None:
    """Unmet vertices serve themselves before anyone else; neutral for t and q."""
    inc = Counter()
    for (u, v), k in mult.items():
        inc[v] += k
    progress = True
    while progress:
        progress = False
        for v in inst.vertices:
            if inc[v] >= inst.d[v]:
                continue
            others = sorted(p for p, k in mult.items() if k > 0 and p[0] == v and p[1] != v)
            for p in others:
                while mult[p] > 0 and inc[v] < inst.d[v]:
                    mult[p] -= 1
                    mult[(v, v)] += 1
                    inc[p[1]] -= 1
                    inc[v] += 1
                    progress = True


def _find_cycle(mult: Counter) -> list[int] | None:
    succ: dict[int, list[int]] = {}
    for (u, v), k in sorted(mult.items()):
        if k > 0 and u != v:
            succ.setdefault(u, []).append(v)
    color: dict[int, int] = {}
    for start in sorted(succ):
        if color.get(start):
            continue
        stack = [(start, iter(succ.get(start, ())))]
        path = [start]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                color[node] = 2
            elif color.get(nxt) == 1:
                return path[path.index(nxt):]
            elif not color.get(nxt):
                color[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return None


def _remove_cycles(mult: Counter) -> None:
    while (cyc := _find_cycle(mult)) is not None:
        for idx, u in enumerate(cyc):
            w = cyc[(idx + 1) % len(cyc)]
            mult[(u, w)] -= 1
            mult[(u, u)] += 1


def _settle(a: Assignment, inst: Instance) -> Assignment:
    mult = Counter(dict(a.items()))
    _redirect_unmet(mult, inst)
    _remove_cycles(mult)
    return Assignment(+mult)


def _underfull_unmet(a: Assignment, inst: Instance) -> list[int]:
    return [
        v for v in inst.vertices if a.incoming(v) < inst.d[v] and a.outgoing(v) < inst.c[v]
    ]


def _self_serve(a: Assignment, inst: Instance, v: int) -> Assignment:
    k = min(inst.c[v] - a.outgoing(v), inst.d[v] - a.incoming(v))
    return a + Assignment({(v, v): k})


def normalize_for_search(a: Assignment, inst: Instance) -> Assignment:
    """Prepare a proper assignment for path search.

    Underfull vertices with unmet demand serve themselves, unmet vertices
    redirect their capacity to themselves, and directed cycles become
    self-loops. Unmet demand never increases.
    """
    while True:
        a = _settle(a, inst)
        todo = _underfull_unmet(a, inst)
        if not todo:
            return a
        for v in todo:
            a = _self_serve(a, inst, v)


def find_semi_alternating_path(a: Assignment, inst: Instance) -> list[int] | None:
    """Shortest semi-alternating path from an unmet vertex to one with spare capacity.

    Breadth-first search over (vertex, parity) states. At even positions the
    walk takes any edge or self-loop; at odd positions it follows an arc of
    ``a``. An odd-position vertex with spare capacity ends the walk. Returns
    None when no such path exists, which certifies infeasibility once ``a``
    has been through :func:`normalize_for_search`.
    """
    g = inst.graph
    arcs: dict[int, list[int]] = {}
    for (u, v), k in a.items():
        arcs.setdefault(u, []).append(v)
    starts = [v for v in inst.vertices if a.incoming(v) < inst.d[v]]
    prev: dict[tuple[int, int], tuple[int, int] | None] = {}
    queue: deque[tuple[int, int]] = deque()
    for s in starts:
        prev[(s, 0)] = None
        queue.append((s, 0))

    def unwind(state):
        path = []
        while state is not None:
            path.append(state[0])
            state = prev[state]
        return path[::-1]

    while queue:
        x, parity = queue.popleft()
        if parity == 0:
            nxt = [(y, 1) for y in g.closed_neighborhood(x)]
        else:
            nxt = [(y, 0) for y in arcs.get(x, ())]
        for st in nxt:
            if st in prev:
                continue
            prev[st] = (x, parity)
            if st[1] == 1 and a.outgoing(st[0]) < inst.c[st[0]]:
                return unwind(st)
            queue.append(st)
    return None


def augment(a: Assignment, path: list[int], inst: Instance | None = None) -> Assignment:
    """Shift one unit of coverage along ``path``.

    Drops ``(p1,p2), (p3,p4), ...`` and adds ``(p1,p0), (p3,p2), ..., (pl,p(l-1))``.
    """
    l = len(path) - 1
    if l < 1 or l % 2 == 0:
        raise ValueError(f"path must have odd positive length, got {l}")
    if inst is not None:
        for x, y in zip(path, path[1:]):
            if x != y and not inst.graph.has_edge(x, y):
                raise ValueError(f"path step {x}->{y} is not an edge")
    mult = Counter(dict(a.items()))
    for idx in range(1, l - 1, 2):
        p = (path[idx], path[idx + 1])
        if mult[p] <= 0:
            raise ValueError(f"path step {p} is not an arc of the assignment")
        mult[p] -= 1
    for idx in range(1, l + 1, 2):
        mult[(path[idx], path[idx - 1])] += 1
    return Assignment(+mult)


def improve(a: Assignment, inst: Instance) -> Assignment | None:
    """One reassignment step on a proper assignment with unmet demand.

    Covers at least one more unit while adding at most one facility. Returns
    ``a`` unchanged when nothing is unmet and None when no path exists.
    """
    a = _settle(a, inst)
    if unmet_demand(a, inst) == 0:
        return a
    todo = _underfull_unmet(a, inst)
    if todo:
        return _self_serve(a, inst, todo[0])
    path = find_semi_alternating_path(a, inst)
    if path is None:
        return None
    return augment(a, path)


def smooth(a: Assignment, inst: Instance) -> Assignment | None:
    """Proper covering assignment built from ``a``, or None if the instance is infeasible."""
    a = remove_overloads(a, inst)
    for _ in range(inst.total_demand + 1):
        if unmet_demand(a, inst) == 0:
            return a
        a = improve(a, inst)
        if a is None:
            return None
    raise RuntimeError("smoothing did not terminate within the demand bound")
