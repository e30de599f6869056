"""Instance text format, result JSON, and seeded instance generators.

Format (vertex ids are 1-based on disk)::

    c optional comment
    p cdp <n> <m>
    v <id> <demand> <capacity>
    e <u> <v>

The vertex-cover variant uses ``p cvcp <n> <m>``, ``v <id> <capacity>`` and
``e <u> <v> <demand>``.
"""

from __future__ import annotations

import json
from typing import TextIO

import numpy as np

from .assignment import Assignment
from .cvcp import CvcpSolution, VcInstance
from .graph_core import Instance, PlanarGraph


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def _ints(tokens, lineno, count):
    if len(tokens) != count:
        raise ParseError(lineno, f"expected {count} fields, got {len(tokens)}")
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, "fields must be integers") from None
    if any(x < 0 for x in vals):
        raise ParseError(lineno, "fields must be nonnegative")
    return vals


def parse_instance(text: str) -> Instance | VcInstance:
    kind = None
    n = m = 0
    vert: dict[int, list[int]] = {}
    edges: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        tag = tok[0]
        if tag == "p":
            if kind is not None:
                raise ParseError(lineno, "duplicate header")
            if len(tok) != 4 or tok[1] not in ("cdp", "cvcp"):
                raise ParseError(lineno, "header must be 'p cdp <n> <m>' or 'p cvcp <n> <m>'")
            kind = tok[1]
            n, m = _ints(tok[2:], lineno, 2)
        elif kind is None:
            raise ParseError(lineno, "record before header")
        elif tag == "v":
            vals = _ints(tok[1:], lineno, 3 if kind == "cdp" else 2)
            if not 1 <= vals[0] <= n:
                raise ParseError(lineno, f"vertex id {vals[0]} out of range 1..{n}")
            if vals[0] in vert:
                raise ParseError(lineno, f"vertex {vals[0]} listed twice")
            vert[vals[0]] = vals[1:]
        elif tag == "e":
            vals = _ints(tok[1:], lineno, 2 if kind == "cdp" else 3)
            for x in vals[:2]:
                if not 1 <= x <= n:
                    raise ParseError(lineno, f"vertex id {x} out of range 1..{n}")
            if vals[0] == vals[1]:
                raise ParseError(lineno, "self-loop")
            edges.append([vals[0] - 1, vals[1] - 1, *vals[2:]])
        else:
            raise ParseError(lineno, f"unknown record type {tag!r}")
    if kind is None:
        raise ParseError(0, "missing header")
    if len(vert) != n:
        raise ParseError(0, f"header declares {n} vertices, found {len(vert)}")
    if len(edges) != m:
        raise ParseError(0, f"header declares {m} edges, found {len(edges)}")
    try:
        if kind == "cdp":
            return Instance.build(
                n, edges, [vert[i][0] for i in range(1, n + 1)], [vert[i][1] for i in range(1, n + 1)]
            )
        return VcInstance.build(n, [tuple(e) for e in edges], [vert[i][0] for i in range(1, n + 1)])
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None


def read_instance(path) -> Instance | VcInstance:
    with open(path) as fh:
        return parse_instance(fh.read())


def format_instance(inst: Instance | VcInstance, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"c {comment}")
    g = inst.graph
    if isinstance(inst, VcInstance):
        lines.append(f"p cvcp {g.n} {len(g.edges)}")
        lines += [f"v {v + 1} {inst.c[v]}" for v in g.vertices]
        lines += [f"e {u + 1} {v + 1} {inst.demand((u, v))}" for u, v in g.edges]
    else:
        lines.append(f"p cdp {g.n} {len(g.edges)}")
        lines += [f"v {v + 1} {inst.d[v]} {inst.c[v]}" for v in g.vertices]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_instance(inst, fh: TextIO, comment: str | None = None) -> None:
    fh.write(format_instance(inst, comment))


def result_json(
    assignment: Assignment | CvcpSolution | None,
    mode: str,
    k: int | None = None,
    shift: int | None = None,
) -> str:
    """Canonical result document; ids are 1-based like the instance file."""
    doc: dict = {"feasible": assignment is not None}
    if isinstance(assignment, CvcpSolution):
        doc["size"] = assignment.size
        doc["dominating_set"] = sorted(u + 1 for u in assignment.cover)
        doc["assignment"] = [
            {"facility": u + 1, "edge": [e[0] + 1, e[1] + 1], "mult": k_}
            for (u, e), k_ in sorted(assignment.coverage.items())
        ]
    elif assignment is not None:
        doc["size"] = assignment.size
        doc["dominating_set"] = sorted(u + 1 for u in assignment.dominating_set())
        doc["assignment"] = [
            {"facility": u + 1, "client": v + 1, "mult": k_} for (u, v), k_ in assignment.items()
        ]
    else:
        doc["size"] = None
        doc["dominating_set"] = []
        doc["assignment"] = []
    doc["mode"] = mode
    doc["k"] = k
    doc["shift"] = shift
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# --- generators -------------------------------------------------------------

FAMILIES = ("grid", "path", "star", "trigrid")


def grid_edges(rows: int, cols: int, diagonals: bool = False) -> list[tuple[int, int]]:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
            if diagonals and c + 1 < cols and r + 1 < rows:
                edges.append((v, v + cols + 1))
    return edges


def family_graph(family: str, rows: int = 0, cols: int = 0, n: int = 0) -> PlanarGraph:
    if family == "grid":
        return PlanarGraph.from_edges(rows * cols, grid_edges(rows, cols))
    if family == "trigrid":
        return PlanarGraph.from_edges(rows * cols, grid_edges(rows, cols, diagonals=True))
    if family == "path":
        return PlanarGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "star":
        return PlanarGraph.from_edges(n, [(0, i) for i in range(1, n)])
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def generate(
    family: str,
    *,
    rows: int = 0,
    cols: int = 0,
    n: int = 0,
    dmax: int = 1,
    cmax: int = 1,
    seed: int = 0,
) -> Instance:
    """Planar instance with demands uniform on [0, dmax] and capacities on [1, cmax]."""
    g = family_graph(family, rows, cols, n)
    rng = np.random.default_rng(seed)
    d = rng.integers(0, dmax, size=g.n, endpoint=True)
    c = rng.integers(1, cmax, size=g.n, endpoint=True)
    return Instance(g, tuple(int(x) for x in d), tuple(int(x) for x in c))


def generate_cvcp(
    family: str,
    *,
    rows: int = 0,
    cols: int = 0,
    n: int = 0,
    dmax: int = 1,
    cmax: int = 1,
    seed: int = 0,
) -> VcInstance:
    g = family_graph(family, rows, cols, n)
    rng = np.random.default_rng(seed)
    dem = rng.integers(0, dmax, size=len(g.edges), endpoint=True)
    c = rng.integers(1, cmax, size=g.n, endpoint=True)
    return VcInstance(g, {e: int(k) for e, k in zip(g.edges, dem)}, tuple(int(x) for x in c))
