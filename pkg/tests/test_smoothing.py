import random

import pytest

from capdom.assignment import (
    Assignment,
    is_covering,
    is_proper,
    strict_validate,
    unmet_demand,
)
from capdom.dp_solver import cdp_dp
from capdom.feasibility import is_instance_feasible
from capdom.graph_core import Instance, SubgraphView, bfs_levels
from capdom.smoothing import (
    augment,
    find_semi_alternating_path,
    improve,
    normalize_for_search,
    remove_overloads,
    smooth,
)

from conftest import grid_instance, path_instance, random_proper_assignment, small_instances


def test_remove_overloads_forced():
    inst = Instance.build(2, [(0, 1)], [1, 1], [1, 0])
    r = remove_overloads(Assignment([(0, 0), (0, 1)]), inst)
    assert is_proper(r, inst) and r.total == 1


def test_remove_overloads_fixpoint():
    inst = grid_instance(2, 2, d=1, c=2)
    a = Assignment([(0, 0), (0, 1), (3, 3)])
    assert remove_overloads(a, inst) is a


def test_remove_overloads_trims_largest_first():
    inst = Instance.build(3, [(0, 1), (0, 2)], [0, 3, 1], [2, 0, 0])
    r = remove_overloads(Assignment({(0, 1): 3, (0, 2): 1}), inst)
    assert r == Assignment({(0, 1): 1, (0, 2): 1})


def _masked_view(inst, cols, masked_cols, width=4):
    vs = tuple(v for v in inst.vertices if v % width in cols)
    inside = set(vs)
    edges = tuple(e for e in inst.edges if e[0] in inside and e[1] in inside)
    d = {v: 0 if v % width in masked_cols else inst.d[v] for v in vs}
    return SubgraphView(inst, 0, 0, frozenset(), vs, edges, d, {v: inst.c[v] for v in vs})


def test_overlapping_solves_on_2x4_grid():
    inst = grid_instance(2, 4, d=1, c=1)
    left = cdp_dp(_masked_view(inst, {0, 1, 2}, {2}))
    right = cdp_dp(_masked_view(inst, {1, 2, 3}, {1}))
    union = left + right
    assert is_covering(union, inst) and not is_proper(union, inst)
    trimmed = remove_overloads(union, inst)
    assert is_proper(trimmed, inst)
    assert all(trimmed.incoming(v) <= inst.d[v] for v in inst.vertices)
    assert unmet_demand(trimmed, inst) > 0
    out = smooth(union, inst)
    assert strict_validate(out, inst)


def test_normalize_self_serves_underfull():
    inst = Instance.build(2, [(0, 1)], [2, 0], [3, 0])
    a = Assignment([(0, 0)])
    out = normalize_for_search(a, inst)
    assert out[(0, 0)] == 2 and unmet_demand(out, inst) < unmet_demand(a, inst)


def test_normalize_breaks_two_cycle():
    inst = Instance.build(3, [(0, 1), (1, 2)], [1, 1, 1], [1, 1, 0])
    out = normalize_for_search(Assignment([(0, 1), (1, 0)]), inst)
    assert out == Assignment([(0, 0), (1, 1)])


def test_normalize_noop_when_covered():
    inst = grid_instance(2, 2, d=1, c=2)
    a = Assignment([(0, 0), (0, 1), (3, 2), (3, 3)])
    assert normalize_for_search(a, inst) == a


def test_path_direct_step():
    inst = Instance.build(2, [(0, 1)], [1, 0], [0, 1])
    assert find_semi_alternating_path(Assignment(), inst) == [0, 1]
    assert augment(Assignment(), [0, 1]) == Assignment([(1, 0)])


def test_path_through_self_loop():
    inst = path_instance([1, 1, 0], [0, 1, 1])
    a = Assignment([(1, 1)])
    path = find_semi_alternating_path(a, inst)
    assert path == [0, 1, 1, 2]
    out = augment(a, path, inst)
    assert out == Assignment([(1, 0), (2, 1)])
    assert strict_validate(out, inst) and out.size == 2


def test_no_path_when_infeasible():
    inst = Instance.build(1, [], [3], [2])
    a = Assignment({(0, 0): 2})
    assert find_semi_alternating_path(a, inst) is None


def test_augment_rejects_malformed():
    with pytest.raises(ValueError):
        augment(Assignment(), [0, 1, 2])
    with pytest.raises(ValueError):
        augment(Assignment(), [0, 1, 1, 2])
    inst = path_instance([1, 0, 0], [0, 0, 1])
    with pytest.raises(ValueError):
        augment(Assignment(), [0, 2], inst)


def test_smooth_fixpoint_and_infeasible():
    inst = grid_instance(2, 2, d=1, c=2)
    a = Assignment([(0, 0), (0, 1), (3, 2), (3, 3)])
    assert smooth(a, inst) is a
    assert smooth(Assignment(), Instance.build(1, [], [2], [1])) is None


def test_smooth_grid_union():
    inst = grid_instance(3, 3, d=1, c=2)
    full = cdp_dp(inst)
    out = smooth(full + full, inst)
    assert strict_validate(out, inst)


@pytest.mark.parametrize("seed", range(5))
def test_improve_steps_respect_bounds(seed):
    rng = random.Random(seed)
    for inst in small_instances(20, seed0=40 * seed):
        if not is_instance_feasible(inst):
            continue
        a = random_proper_assignment(inst, rng)
        steps = 0
        while unmet_demand(a, inst) > 0:
            b = improve(a, inst)
            assert b is not None
            assert is_proper(b, inst)
            assert unmet_demand(b, inst) <= unmet_demand(a, inst) - 1
            assert b.size <= a.size + 1
            a = b
            steps += 1
        assert steps <= inst.total_demand
        assert strict_validate(a, inst)
