import pytest

from capdom.assignment import Assignment, strict_validate
from capdom.graph_core import Instance, PlanarGraph
from capdom.io import generate
from capdom.oracle import brute_force_cdp, brute_force_cvcp

from conftest import path_instance


def test_single_vertex():
    res = brute_force_cdp(Instance.build(1, [], [1], [1]))
    assert res.feasible and res.opt_size == 1 and res.witness == Assignment([(0, 0)])
    assert not brute_force_cdp(Instance.build(1, [], [1], [0])).feasible


def test_path_by_enumeration():
    inst = path_instance([1, 1, 1], [1, 1, 1])
    res = brute_force_cdp(inst)
    assert res.opt_size == 3 and strict_validate(res.witness, inst)


def test_limit():
    inst = generate("path", n=20, seed=0)
    with pytest.raises(ValueError, match="DP or PTAS"):
        brute_force_cdp(inst)


def test_size_cap_stops_early():
    inst = path_instance([1, 1, 1], [1, 1, 1])
    assert not brute_force_cdp(inst, size_cap=2).feasible
    assert brute_force_cdp(inst, size_cap=3).opt_size == 3


def test_cvcp_single_edge():
    g = PlanarGraph.from_edges(2, [(0, 1)])
    assert brute_force_cvcp(g, {(0, 1): 2}, (1, 1)).opt_size == 2
    assert not brute_force_cvcp(g, {(0, 1): 3}, (1, 1)).feasible


def test_cvcp_triangle():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert brute_force_cvcp(g, {e: 1 for e in g.edges}, (2, 2, 2)).opt_size == 2


@pytest.mark.parametrize("seed", range(10))
def test_monotone_in_capacity_and_demand(seed):
    inst = generate("grid", rows=2, cols=3, dmax=2, cmax=2, seed=seed)
    base = brute_force_cdp(inst)
    more_cap = Instance(inst.graph, inst.d, tuple(x + 1 for x in inst.c))
    more_dem = Instance(inst.graph, tuple(min(x + 1, 2) for x in inst.d), inst.c)
    up = brute_force_cdp(more_cap)
    down = brute_force_cdp(more_dem)
    if base.feasible:
        assert up.feasible and up.opt_size <= base.opt_size
    if down.feasible:
        assert base.feasible and base.opt_size <= down.opt_size
