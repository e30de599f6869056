import pytest

from capdom.cvcp import VcInstance, reduce_to_cdp, solve_cvcp
from capdom.graph_core import PlanarGraph
from capdom.io import generate_cvcp
from capdom.oracle import brute_force_cdp, brute_force_cvcp
from capdom.ptas import PtasConfig


def test_reduce_single_edge():
    vc = VcInstance.build(2, [(0, 1, 2)], [1, 1])
    inst, bis = reduce_to_cdp(vc)
    w = bis[(0, 1)]
    assert w == 2 and set(inst.edges) == {(0, 2), (1, 2)}
    assert inst.d == (0, 0, 2) and inst.c == (1, 1, 0)


def test_reduce_edgeless():
    vc = VcInstance(PlanarGraph.from_edges(3, []), {}, (1, 2, 3))
    inst, bis = reduce_to_cdp(vc)
    assert inst.n == 3 and not bis and inst.total_demand == 0


def test_reduce_triangle_counts():
    vc = VcInstance.build(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)], [2, 2, 2])
    inst, bis = reduce_to_cdp(vc)
    assert inst.n == 6 and len(inst.edges) == 6 and len(bis) == 3


def test_reduction_preserves_maxima():
    vc = generate_cvcp("grid", rows=2, cols=3, dmax=2, cmax=2, seed=1)
    inst, _ = reduce_to_cdp(vc)
    assert inst.d_star == vc.d_star and inst.c_star == vc.c_star


def test_solve_single_edge():
    vc = VcInstance.build(2, [(0, 1, 2)], [1, 1])
    sol = solve_cvcp(vc, PtasConfig(epsilon=1))
    assert sol.cover == {0, 1} and sol.size == brute_force_cvcp(vc.graph, vc.edge_demand, vc.c).opt_size


def test_solve_triangle_within_bound():
    vc = VcInstance.build(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)], [2, 2, 2])
    opt = brute_force_cvcp(vc.graph, vc.edge_demand, vc.c).opt_size
    assert opt == 2
    sol = solve_cvcp(vc, PtasConfig(epsilon=1))
    assert opt <= sol.size <= 2 * opt


def test_zero_demand_gives_empty_cover():
    vc = VcInstance.build(3, [(0, 1, 0), (1, 2, 0)], [1, 1, 1])
    sol = solve_cvcp(vc, PtasConfig(epsilon=1))
    assert sol.cover == frozenset() and sol.size == 0


def test_infeasible_propagates():
    vc = VcInstance.build(2, [(0, 1, 3)], [1, 1])
    assert solve_cvcp(vc, PtasConfig(epsilon=1)) is None


def test_demand_on_non_edge_rejected():
    with pytest.raises(ValueError):
        VcInstance(PlanarGraph.from_edges(2, [(0, 1)]), {(0, 2): 1}, (1, 1))


@pytest.mark.parametrize("seed", range(10))
def test_reduction_optimum_matches(seed):
    fam = ["grid", "path", "star", "trigrid"][seed % 4]
    vc = generate_cvcp(fam, rows=2, cols=3, n=5, dmax=2, cmax=2, seed=seed)
    inst, bis = reduce_to_cdp(vc)
    a = brute_force_cvcp(vc.graph, vc.edge_demand, vc.c)
    b = brute_force_cdp(inst)
    assert a.feasible == b.feasible and a.opt_size == b.opt_size
    if b.feasible:
        assert not b.witness.dominating_set() & set(bis.values())
        sol = solve_cvcp(vc, PtasConfig(epsilon=1))
        assert sol.cover <= set(vc.graph.vertices)
