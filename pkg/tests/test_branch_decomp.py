from dataclasses import replace
from functools import lru_cache

import pytest

from capdom.branch_decomp import build_decomposition, cluster_boundary, validate
from capdom.graph_core import PlanarGraph, bfs_levels
from capdom.io import generate, grid_edges
from capdom.ptas import shift_pieces


def _optimal_width(edges):
    """Minimum width over every rooted binary tree on the edge set."""
    edges = tuple(sorted(edges))

    @lru_cache(maxsize=None)
    def best(cluster):
        own = len(cluster_boundary(cluster, edges))
        if len(cluster) == 1:
            return own
        items = sorted(cluster)
        first, rest = items[0], items[1:]
        result = None
        # split into (part containing first, remainder), remainder nonempty
        for mask in range(2 ** len(rest) - 1):
            left = frozenset([first] + [e for b, e in enumerate(rest) if mask >> b & 1])
            right = cluster - left
            w = max(best(left), best(right))
            result = w if result is None else min(result, w)
        return max(own, result)

    return best(frozenset(edges))


def _worst_width(edges):
    edges = tuple(sorted(edges))

    @lru_cache(maxsize=None)
    def worst(cluster):
        own = len(cluster_boundary(cluster, edges))
        if len(cluster) == 1:
            return own
        items = sorted(cluster)
        first, rest = items[0], items[1:]
        result = 0
        for mask in range(2 ** len(rest) - 1):
            left = frozenset([first] + [e for b, e in enumerate(rest) if mask >> b & 1])
            result = max(result, worst(left), worst(cluster - left))
        return max(own, result)

    return worst(frozenset(edges))


def test_single_edge():
    g = PlanarGraph.from_edges(2, [(0, 1)])
    bd = build_decomposition(g)
    assert len(bd.nodes) == 1 and bd.width == 0 and validate(bd, g)[0]


def test_path_of_two_edges():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    bd = build_decomposition(g)
    root = bd.nodes[bd.root]
    assert len(root.children) == 2
    assert all(bd.nodes[ch].is_leaf and bd.nodes[ch].boundary == (1,) for ch in root.children)
    assert bd.width == 1


def test_grid3x3_width():
    g = PlanarGraph.from_edges(9, grid_edges(3, 3))
    bd = build_decomposition(g)
    assert validate(bd, g)[0]
    assert bd.width <= 6


def test_edgeless_rejected():
    with pytest.raises(ValueError):
        build_decomposition(PlanarGraph.from_edges(2, []))


def test_corrupted_boundary_detected():
    g = PlanarGraph.from_edges(9, grid_edges(3, 3))
    bd = build_decomposition(g)
    nodes = list(bd.nodes)
    leaf = bd.leaves()[0]
    nodes[leaf.id] = replace(leaf, boundary=leaf.boundary + (99,))
    ok, why = validate(replace(bd, nodes=tuple(nodes)), g)
    assert not ok and "boundary" in why


def test_star_width_is_one_everywhere():
    edges = [(0, 1), (0, 2), (0, 3)]
    assert _optimal_width(edges) == _worst_width(edges) == 1
    assert build_decomposition(PlanarGraph.from_edges(4, edges)).width == 1


SMALL_GRAPHS = [
    [(0, 1), (1, 2), (2, 0)],
    [(0, 1), (1, 2), (2, 3), (3, 0)],
    [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    grid_edges(2, 3)[:6],
    [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
    [(0, 1), (2, 3), (4, 5)],
]


@pytest.mark.parametrize("edges", SMALL_GRAPHS)
def test_heuristic_against_exhaustive_search(edges):
    n = 1 + max(max(e) for e in edges)
    g = PlanarGraph.from_edges(n, edges)
    bd = build_decomposition(g)
    assert validate(bd, g)[0]
    opt = _optimal_width(g.edges)
    assert opt <= bd.width <= _worst_width(g.edges)
    # on these tiny graphs the greedy order should find the optimum
    assert bd.width == opt


@pytest.mark.parametrize("family", ["grid", "trigrid", "path", "star"])
def test_structure_invariants(family):
    inst = generate(family, rows=3, cols=4, n=9, seed=1)
    bd = build_decomposition(inst.graph)
    assert validate(bd, inst.graph)[0]
    for nd in bd.nodes:
        if nd.is_leaf:
            continue
        a, b = (bd.nodes[ch] for ch in nd.children)
        assert set(nd.boundary) <= set(a.boundary) | set(b.boundary)
        forgotten = (set(a.boundary) & set(b.boundary)) - set(nd.boundary)
        for v in forgotten:
            assert all(e in nd.edges for e in inst.edges if v in e)
    assert bd.nodes[bd.root].boundary == ()


def test_dump_mentions_every_node():
    g = PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    bd = build_decomposition(g)
    assert len(bd.dump().splitlines()) == len(bd.nodes)


@pytest.mark.parametrize("rows,cols", [(3, 3), (4, 5), (5, 5), (6, 7)])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_grid_slab_and_patch_widths(rows, cols, k):
    inst = generate("grid", rows=rows, cols=cols, seed=0)
    for root in (0, (rows // 2) * cols + cols // 2):
        levels = bfs_levels(inst, root)
        for i in range(k):
            slabs, patches = shift_pieces(inst, levels, k, i)
            for view in slabs:
                if view.edges:
                    bd = build_decomposition(view)
                    assert validate(bd, view)[0]
                    assert bd.width <= 2 * k
            for view in patches:
                if view.edges:
                    bd = build_decomposition(view)
                    assert validate(bd, view)[0]
                    assert bd.width <= 8
