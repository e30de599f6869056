"""Multiset assignments of (facility, client) pairs."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

from .graph_core import Instance

Pair = tuple[int, int]


class Assignment:
    """Immutable multiset of ordered ``(facility, client)`` pairs.

    Pairs iterate in lexicographic order. Zero multiplicities are never stored.
    The client bound ``incoming(v) <= d(v)`` is not enforced here, because
    unions built before smoothing may exceed it; use :func:`strict_validate`
    on final results.
    """

    __slots__ = ("_mult", "_out", "_in", "_hash")

    def __init__(self, pairs: Mapping[Pair, int] | Iterable[Pair] = ()):
        if isinstance(pairs, Mapping):
            items = pairs.items()
        else:
            items = Counter(pairs).items()
        mult: dict[Pair, int] = {}
        for (u, v), k in items:
            if k < 0:
                raise ValueError(f"negative multiplicity for pair {(u, v)}")
            if k:
                mult[(int(u), int(v))] = mult.get((int(u), int(v)), 0) + int(k)
        self._mult = dict(sorted(mult.items()))
        out: Counter[int] = Counter()
        inc: Counter[int] = Counter()
        for (u, v), k in self._mult.items():
            out[u] += k
            inc[v] += k
        self._out = out
        self._in = inc
        self._hash = None

    def __iter__(self) -> Iterator[Pair]:
        return iter(self._mult)

    def __len__(self) -> int:
        return len(self._mult)

    def __getitem__(self, pair: Pair) -> int:
        return self._mult.get(pair, 0)

    def __contains__(self, pair: object) -> bool:
        return pair in self._mult

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Assignment):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._mult.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({u},{v})" + (f"^{k}" if k > 1 else "") for (u, v), k in self._mult.items())
        return "Assignment{" + body + "}"

    def __add__(self, other: "Assignment") -> "Assignment":
        return uplus(self, other)

    def items(self):
        return self._mult.items()

    def outgoing(self, u: int) -> int:
        return self._out.get(u, 0)

    def incoming(self, v: int) -> int:
        return self._in.get(v, 0)

    @property
    def total(self) -> int:
        return sum(self._mult.values())

    def dominating_set(self) -> frozenset[int]:
        return frozenset(self._out)

    @property
    def size(self) -> int:
        return len(self._out)

    def to_records(self) -> list[dict[str, int]]:
        return [{"facility": u, "client": v, "mult": k} for (u, v), k in self._mult.items()]


EMPTY = Assignment()


def uplus(*parts: Assignment) -> Assignment:
    """Multiset union with additive multiplicities."""
    acc: Counter[Pair] = Counter()
    for a in parts:
        acc.update(a._mult)
    return Assignment(acc)


def dominating_set(a: Assignment) -> frozenset[int]:
    return a.dominating_set()


def size(a: Assignment) -> int:
    return a.size


def is_proper(a: Assignment, inst: Instance) -> bool:
    return all(k <= inst.c[u] for u, k in a._out.items())


def is_covering(a: Assignment, inst: Instance) -> bool:
    return all(a.incoming(v) == inst.d[v] for v in inst.vertices)


def unmet_demand(a: Assignment, inst: Instance) -> int:
    """Total demand not met; over-coverage at a vertex counts as zero, not negative."""
    return sum(max(inst.d[v] - a.incoming(v), 0) for v in inst.vertices)


def unmet_vertices(a: Assignment, inst: Instance) -> list[int]:
    return [v for v in inst.vertices if a.incoming(v) < inst.d[v]]


def violations(a: Assignment, inst: Instance) -> list[str]:
    """Every way ``a`` fails to be a proper covering assignment for ``inst``."""
    problems = []
    g = inst.graph
    for (u, v), k in a.items():
        if not (0 <= u < inst.n and 0 <= v < inst.n):
            problems.append(f"pair ({u},{v}) references a missing vertex")
        elif u != v and not g.has_edge(u, v):
            problems.append(f"pair ({u},{v}) is neither a self-pair nor an edge")
    for u in sorted(a._out):
        if 0 <= u < inst.n and a.outgoing(u) > inst.c[u]:
            problems.append(f"facility {u} serves {a.outgoing(u)} > capacity {inst.c[u]}")
    for v in inst.vertices:
        got = a.incoming(v)
        if got > inst.d[v]:
            problems.append(f"client {v} receives {got} > demand {inst.d[v]}")
        elif got < inst.d[v]:
            problems.append(f"client {v} receives {got} < demand {inst.d[v]}")
    return problems


def strict_validate(a: Assignment, inst: Instance) -> bool:
    """Full check: valid pairs, proper, and every client covered exactly."""
    return not violations(a, inst)
