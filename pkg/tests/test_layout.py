import numpy as np
import pytest

from helpers import width_one_instances
from mimsolve.errors import InputError, SizeError
from mimsolve.generators import (complete_graph, cycle_graph, interval_graph, path_graph,
                                 permutation_graph, random_intervals, random_permutation)
from mimsolve.graph import Graph, complement, induced_subgraph
from mimsolve.layout import (CotreeNode, RootedLayout, caterpillar, cograph_from_cotree,
                             complement_reuse_check, concatenate, cotree_layout, graft,
                             interval_layout, layout_from_order, permutation_layout,
                             restrict_layout, validate_width)
from mimsolve.oracles import all_layouts, brute_mimwidth_le


def test_layout_structure_checks():
    with pytest.raises(InputError):
        RootedLayout([-1, -1], [-1, -1], [0, 1])  # two roots
    with pytest.raises(InputError):
        RootedLayout.from_nested((0, 0))
    lay = RootedLayout.from_nested(((0, 1), (2, 3)))
    assert lay.size == 7 and lay.root == 6
    assert lay.vertices() == frozenset(range(4))
    assert lay.to_nested() == ((0, 1), (2, 3))


def test_parent_set_is_disjoint_union_of_children():
    for g, lay in width_one_instances(60, 10, seed=5):
        for t in range(lay.size):
            if not lay.is_leaf(t):
                a, b = lay.children(t)
                assert lay.masks[a] & lay.masks[b] == 0
                assert lay.masks[a] | lay.masks[b] == lay.masks[t]
        assert lay.masks[lay.root] == g.full_mask


def test_layout_from_order_shapes():
    assert layout_from_order([0]).size == 1
    two = layout_from_order([1, 0])
    assert two.to_nested() == (1, 0)
    four = layout_from_order([2, 0, 3, 1])
    assert four.to_nested() == (((2, 0), 3), 1)
    assert four.leaf_order() == [2, 0, 3, 1]
    with pytest.raises(InputError):
        layout_from_order([0, 2])
    with pytest.raises(InputError):
        layout_from_order([])


def test_validate_width_examples():
    p4 = interval_graph([(0, 2), (1, 3), (2, 4), (3, 5)])
    assert p4 == path_graph(4)
    assert validate_width(p4, interval_layout([(0, 2), (1, 3), (2, 4), (3, 5)]), 1)
    c5 = cycle_graph(5)
    assert not any(validate_width(c5, lay, 1) for lay in all_layouts(5))
    single = Graph(1)
    for w in (0, 1, 2):
        assert validate_width(single, layout_from_order([0]), w)


def test_validate_width_reports_failing_node():
    c5 = cycle_graph(5)
    rep = validate_width(c5, layout_from_order(range(5)), 1)
    assert not rep and rep.failing_node is not None and rep.values[rep.failing_node] == 2
    rep2 = validate_width(c5, layout_from_order(range(5)), 2)
    assert rep2 and rep2.width == 2


def test_validate_width_bijection_mismatch():
    with pytest.raises(InputError):
        validate_width(path_graph(3), layout_from_order([0, 1]), 1)


def test_validate_width_guard():
    with pytest.raises(SizeError):
        validate_width(complete_graph(6), layout_from_order(range(6)), 2, max_vertices=5)


def test_interval_layout_examples():
    p3 = [(0, 2), (1, 3), (2, 4)]
    lay = interval_layout(p3)
    assert lay.order == (0, 1, 2)
    assert interval_graph(p3) == path_graph(3)
    assert validate_width(interval_graph(p3), lay, 1)
    star = [(0, 10), (1, 2), (3, 4)]
    assert interval_graph(star).m == 2
    assert validate_width(interval_graph(star), interval_layout(star), 1)


def test_random_interval_and_permutation_layouts_have_width_one():
    rng = np.random.default_rng(2)
    for _ in range(100):
        n = int(rng.integers(1, 41))
        iv = random_intervals(n, rng)
        assert validate_width(interval_graph(iv), interval_layout(iv), 1)
        perm = random_permutation(n, rng)
        assert validate_width(permutation_graph(perm), permutation_layout(perm), 1)


def test_permutation_layout_extremes():
    ident = list(range(5))
    rep = validate_width(permutation_graph(ident), permutation_layout(ident), 1)
    assert rep and rep.width == 0
    rev = ident[::-1]
    assert permutation_graph(rev) == complete_graph(5)
    rep = validate_width(permutation_graph(rev), permutation_layout(rev), 1)
    assert rep and rep.width == 1


def _leaf(v):
    return CotreeNode("v", [], vertex=v)


def test_cotree_examples():
    k2 = CotreeNode("J", [_leaf(0), _leaf(1)])
    assert cograph_from_cotree(k2) == complete_graph(2)
    assert validate_width(complete_graph(2), cotree_layout(k2), 1).width == 1
    two = CotreeNode("U", [_leaf(0), _leaf(1)])
    assert validate_width(cograph_from_cotree(two), cotree_layout(two), 1).width == 0
    k22 = CotreeNode("J", [CotreeNode("U", [_leaf(0), _leaf(1)]),
                           CotreeNode("U", [_leaf(2), _leaf(3)])])
    g = cograph_from_cotree(k22)
    assert g.m == 4 and validate_width(g, cotree_layout(k22), 1)


def test_cotree_malformed():
    with pytest.raises(InputError):
        cotree_layout(CotreeNode("X", [_leaf(0), _leaf(1)]))
    with pytest.raises(InputError):
        cotree_layout(CotreeNode("U", [_leaf(0)]))
    with pytest.raises(InputError):
        cotree_layout(CotreeNode("U", [_leaf(0), _leaf(2)]))


def test_complement_reuse_on_random_instances():
    for g, lay in width_one_instances(200, 14, seed=8):
        assert complement_reuse_check(g, lay)


def test_complement_reuse_precondition():
    with pytest.raises(InputError):
        complement_reuse_check(cycle_graph(5), layout_from_order(range(5)))


def test_width_one_validation_agrees_with_layout_oracle():
    rng = np.random.default_rng(4)
    for _ in range(25):
        n = int(rng.integers(2, 7))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, pairs)
        any_ok = any(validate_width(g, lay, 1) for lay in all_layouts(n))
        assert any_ok == brute_mimwidth_le(g, 1)


def test_concatenate_and_graft():
    a, b = caterpillar([0]), caterpillar([1])
    two = concatenate(a, b)
    assert two.size == 3 and two.order == (0, 1)
    four = concatenate(caterpillar([0, 1]), caterpillar([2, 3]))
    assert four.order == (0, 1, 2, 3) and four.size == 7
    with pytest.raises(InputError):
        concatenate(caterpillar([0, 1]), caterpillar([1, 2]))
    la, lb = RootedLayout.from_nested((0, 1)), RootedLayout.from_nested(((2, 3), 4))
    gr = graft(la, lb)
    assert gr.size == la.size + lb.size + 1
    assert gr.to_nested() == ((0, 1), ((2, 3), 4))
    with pytest.raises(InputError):
        graft(la, la)


def test_concatenated_width_is_bounded_on_small_cases():
    p2 = path_graph(2)
    g = Graph(4, [(0, 1), (2, 3)])
    lay = concatenate(caterpillar([0, 1]), caterpillar([2, 3]))
    assert validate_width(p2, layout_from_order([0, 1]), 1)
    assert validate_width(g, lay, 1)
    # joining two width-1 pieces with cross edges costs at most one more
    h = Graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    assert validate_width(h, lay, 2)


def test_leaf_deletion_keeps_width_one():
    rng = np.random.default_rng(9)
    for g, lay in width_one_instances(80, 12, seed=12, nmin=2):
        keep = [v for v in range(g.n) if rng.random() < 0.7] or [0]
        sub, _ = induced_subgraph(g, keep)
        assert validate_width(sub, restrict_layout(lay, keep), 1)
        assert validate_width(complement(sub), restrict_layout(lay, keep), 1)
