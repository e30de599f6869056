"""Hard-capacitated dominating set on planar graphs: exact DP, smoothing, PTAS."""

from .assignment import (
    Assignment,
    is_covering,
    is_proper,
    strict_validate,
    unmet_demand,
    uplus,
)
from .branch_decomp import BranchDecomposition, build_decomposition, validate
from .cvcp import VcInstance, reduce_to_cdp, solve_cvcp
from .dp_solver import cdp_dp, solve_dp
from .feasibility import (
    InfeasibleInstance,
    check_cut_condition,
    is_instance_feasible,
    max_coverage,
    normalize_instance,
)
from .graph_core import Instance, PlanarGraph, bfs_levels, extract_patch, extract_slab
from .oracle import brute_force_cdp, brute_force_cvcp
from .ptas import PtasConfig, cdp_ptas, choose_k, solve_ptas
from .smoothing import smooth

__all__ = [
    "Assignment", "BranchDecomposition", "InfeasibleInstance", "Instance", "PlanarGraph",
    "PtasConfig", "VcInstance", "bfs_levels", "brute_force_cdp", "brute_force_cvcp",
    "build_decomposition", "cdp_dp", "cdp_ptas", "check_cut_condition", "choose_k",
    "extract_patch", "extract_slab", "is_covering", "is_instance_feasible", "is_proper",
    "max_coverage", "normalize_instance", "reduce_to_cdp", "smooth", "solve_cvcp",
    "solve_dp", "solve_ptas", "strict_validate", "unmet_demand", "uplus", "validate",
]
