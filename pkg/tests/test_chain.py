import pytest

from helpers import width_one_instances
from mimsolve.chain import (ChainOrders, LayeredDigraph, build_lower_digraphs,
                            build_upper_digraphs, compute_chain_orders, dump_orders,
                            extract_order, verify_chain_orders)
from mimsolve.errors import InvariantError
from mimsolve.generators import complete_graph, cycle_graph, path_graph
from mimsolve.graph import Graph, bits
from mimsolve.layout import RootedLayout, layout_from_order

A, B, C = 0, 1, 2


def _p3_setup():
    g = path_graph(3)  # a-b-c
    lay = RootedLayout.from_nested(((A, B), C))
    node_ab = next(t for t in range(lay.size) if lay.vertices(t) == {A, B})
    return g, lay, node_ab


def test_leaf_digraph_has_one_layer():
    g, lay, _ = _p3_setup()
    lower = build_lower_digraphs(g, lay)
    for t in range(lay.size):
        if lay.is_leaf(t):
            assert lower[t].layers == (1 << lay.vertex[t],) and not lower[t].succ


def test_p3_lower_digraph_rule():
    g, lay, t = _p3_setup()
    d = build_lower_digraphs(g, lay)[t]
    assert d.edges() == [(A, B)]
    assert d.layers == (1 << A, 1 << B)
    orders = compute_chain_orders(g, lay)
    assert orders.lower[t] == (A, B)


def test_twins_share_a_layer():
    g = Graph(3, [(0, 2), (1, 2)])  # 0 and 1 are twins
    lay = RootedLayout.from_nested(((0, 1), 2))
    t = next(t for t in range(lay.size) if lay.vertices(t) == {0, 1})
    assert build_lower_digraphs(g, lay)[t].layers == (0b011,)


def test_upper_digraphs_root_and_children():
    g, lay, _ = _p3_setup()
    upper = build_upper_digraphs(g, lay)
    assert upper[lay.root].vertices == 0 and upper[lay.root].layers == ()
    for c in lay.children(lay.root):
        assert upper[c].vertices == g.full_mask & ~lay.masks[c]


def test_non_chain_cut_surfaces_in_verification():
    g, lay = cycle_graph(5), layout_from_order(range(5))
    check = verify_chain_orders(g, lay, compute_chain_orders(g, lay))
    assert not check


def test_layering_rejects_cycles():
    from mimsolve.chain import _layers
    with pytest.raises(InvariantError):
        _layers(0b11, {0: 0b10, 1: 0b01})


def test_extract_order_examples():
    flat = LayeredDigraph(0b111, {}, (0b111,))
    assert extract_order(flat, [0, 1, 2]) == (0, 1, 2)
    assert extract_order(flat, [2, 0, 1]) == (2, 0, 1)
    layered = LayeredDigraph(0b11, {1: 0b01}, (0b10, 0b01))
    assert extract_order(layered, [0, 1]) == (1, 0)


def _reach(d: LayeredDigraph) -> dict[int, int]:
    reach = {v: d.succ.get(v, 0) for v in bits(d.vertices)}
    changed = True
    while changed:
        changed = False
        for v in reach:
            extra = 0
            for w in bits(reach[v]):
                extra |= reach.get(w, 0)
            if extra & ~reach[v]:
                reach[v] |= extra
                changed = True
    return reach


def test_orders_are_linear_extensions_and_edges_respect_containment():
    for g, lay in width_one_instances(120, 10, seed=21):
        full = g.full_mask
        lower = build_lower_digraphs(g, lay)
        upper = build_upper_digraphs(g, lay)
        for t in range(lay.size):
            for d, far in ((lower[t], full & ~lay.masks[t]), (upper[t], lay.masks[t])):
                order = extract_order(d, range(g.n))
                pos = {v: i for i, v in enumerate(order)}
                for v, r in _reach(d).items():
                    assert all(pos[v] < pos[w] for w in bits(r))
                for v, w in d.edges():
                    assert g.adj[v] & far & ~g.adj[w] == 0


def test_same_layer_propagates_to_parent():
    for g, lay in width_one_instances(120, 10, seed=22):
        lower = build_lower_digraphs(g, lay)
        for t in range(lay.size):
            p = lay.parent[t]
            if p < 0:
                continue
            for layer in lower[t].layers:
                assert len({lower[p].layer_of(v) for v in bits(layer)}) == 1


def test_compute_chain_orders_examples():
    k2 = complete_graph(2)
    orders = compute_chain_orders(k2, layout_from_order([0, 1]), base=[1, 0])
    assert orders.lower[-1] == (1, 0)
    single = Graph(1)
    lay1 = layout_from_order([0])
    assert verify_chain_orders(single, lay1, compute_chain_orders(single, lay1))


def test_verify_passes_on_random_instances_and_is_deterministic():
    for g, lay in width_one_instances(500, 12, seed=23):
        orders = compute_chain_orders(g, lay)
        check = verify_chain_orders(g, lay, orders)
        assert check, (check.condition, check.detail)
        assert compute_chain_orders(g, lay) == orders


def test_verify_names_the_broken_condition():
    g, lay, t = _p3_setup()
    orders = compute_chain_orders(g, lay)
    lower = list(orders.lower)
    lower[t] = lower[t][::-1]
    bad = ChainOrders(tuple(lower), orders.upper, orders.base)
    check = verify_chain_orders(g, lay, bad)
    assert not check and check.condition == "(l-1)" and check.node == t


def test_verify_detects_inconsistent_children():
    g = Graph(4)  # edgeless: every order is a chain order
    lay = layout_from_order(range(4))
    orders = compute_chain_orders(g, lay)
    leaf = 0
    lower = list(orders.lower)
    parent = lay.parent[leaf]
    lower[parent] = lower[parent][::-1]
    check = verify_chain_orders(g, lay, ChainOrders(tuple(lower), orders.upper, orders.base))
    assert not check and check.condition == "(l-2)"


def test_dump_format():
    g, lay, _ = _p3_setup()
    text = dump_orders(compute_chain_orders(g, lay), ["a", "b", "c"])
    lines = text.splitlines()
    assert len(lines) == 2 * lay.size
    assert lines[0].startswith("node 0 lower: ")
