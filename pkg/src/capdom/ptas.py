"""Shifted slab/patch approximation scheme."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .assignment import Assignment, uplus
from .dp_solver import solve_dp
from .feasibility import InfeasibleInstance, normalize_instance
from .graph_core import (
    Instance,
    Levels,
    bfs_levels,
    extract_patch,
    extract_slab,
    patch_indices,
    slab_indices,
)
from .smoothing import smooth


def choose_k(epsilon: float | Fraction, c_star: int) -> int:
    """Slab height ``ceil(4 c* / epsilon)``, never below 2."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    c_star = max(int(c_star), 1)
    return max(2, math.ceil(Fraction(4 * c_star) / Fraction(epsilon)))


@dataclass(frozen=True)
class PtasConfig:
    epsilon: float | Fraction | None = None
    k: int | None = None
    root: int = 0
    parallel_shifts: bool = False

    def __post_init__(self):
        if (self.epsilon is None) == (self.k is None):
            raise ValueError("give exactly one of epsilon and k")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be positive")
        if self.epsilon is not None and self.epsilon <= 0:
            raise ValueError("epsilon must be positive")

    def height(self, c_star: int) -> int:
        if self.k is not None:
            return max(2, self.k)
        return choose_k(self.epsilon, c_star)


@dataclass(frozen=True)
class ShiftResult:
    shift: int
    assignment: Assignment | None
    union: Assignment | None
    max_width: int


@dataclass(frozen=True)
class PtasResult:
    assignment: Assignment | None
    k: int
    shift: int | None
    levels: int
    max_width: int
    shifts: tuple[ShiftResult, ...] = field(repr=False, default=())

    @property
    def feasible(self) -> bool:
        return self.assignment is not None


def shift_pieces(inst: Instance, levels: Levels, k: int, i: int):
    """All slab and patch views for shift ``i``, slabs first."""
    m = levels.m
    slabs = [extract_slab(inst, levels, i, j, k) for j in slab_indices(m, k, i)]
    patches = [extract_patch(inst, levels, i, l, k) for l in patch_indices(m, k, i)]
    return slabs, patches


def run_shift(inst: Instance, levels: Levels, k: int, i: int) -> ShiftResult:
    """Solve every slab and patch of shift ``i`` exactly, take the union, smooth it."""
    slabs, patches = shift_pieces(inst, levels, k, i)
    parts = []
    width = 0
    for view in slabs + patches:
        sol = solve_dp(view)
        width = max(width, sol.width)
        if sol.assignment is None:
            return ShiftResult(i, None, None, width)
        parts.append(sol.assignment)
    union = uplus(*parts)
    return ShiftResult(i, smooth(union, inst), union, width)


def _run_shift_args(args):
    return run_shift(*args)


def solve_ptas(inst: Instance, cfg: PtasConfig) -> PtasResult:
    """Best smoothed shift; see :func:`cdp_ptas`."""
    try:
        inst = normalize_instance(inst)
    except InfeasibleInstance:
        return PtasResult(None, cfg.height(inst.c_star), None, 0, 0)
    k = cfg.height(inst.c_star)
    levels = bfs_levels(inst, cfg.root)
    m = levels.m
    if m <= k:
        sol = solve_dp(inst)
        shift = 0 if sol.assignment is not None else None
        return PtasResult(sol.assignment, k, shift, m, sol.width)
    jobs = [(inst, levels, k, i) for i in range(k)]
    if cfg.parallel_shifts:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_shift_args, jobs))
    else:
        results = [run_shift(*job) for job in jobs]
    best = None
    for r in results:
        if r.assignment is not None and (best is None or r.assignment.size < best.assignment.size):
            best = r
    width = max(r.max_width for r in results)
    if best is None:
        return PtasResult(None, k, None, m, width, tuple(results))
    return PtasResult(best.assignment, k, best.shift, m, width, tuple(results))


def cdp_ptas(inst: Instance, cfg: PtasConfig) -> Assignment | None:
    """Approximate minimum proper covering assignment, or None if infeasible.

    For planar input the result has size at most ``(1 + 4c*/k) OPT``. When the
    BFS depth fits in one slab the exact dynamic program is used directly.
    """
    return solve_ptas(inst, cfg).assignment
