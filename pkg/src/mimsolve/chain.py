"""Lower and upper chain orders for every node of a width-1 layout.

For a node t, a chain order of V_t lists vertices so that earlier ones
have smaller neighbourhoods outside V_t (by inclusion).  Orders are read
off layered digraphs built bottom-up (lower) and top-down (upper) so that
neighbouring nodes agree with each other.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InvariantError
from .graph import Graph, bits
from .layout import RootedLayout


@dataclass(frozen=True)
class LayeredDigraph:
    vertices: int
    succ: dict[int, int]
    layers: tuple[int, ...]

    def layer_of(self, v: int) -> int:
        for i, layer in enumerate(self.layers):
            if layer >> v & 1:
                return i
        raise KeyError(v)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, s in self.succ.items() for w in bits(s)]


def _containment_edges(adj: Sequence[int], members: int, far: int) -> dict[int, int]:
    """Edge v -> w whenever N(v) & far is a strict subset of N(w) & far."""
    groups: dict[int, int] = {}
    for v in bits(members):
        key = adj[v] & far
        groups[key] = groups.get(key, 0) | (1 << v)
    keys = list(groups)
    out: dict[int, int] = {}
    for small in keys:
        above = 0
        for big in keys:
            if big != small and small & ~big == 0:
                above |= groups[big]
        if above:
            for v in bits(groups[small]):
                out[v] = above
    return out


def _layers(vertices: int, succ: dict[int, int]) -> tuple[int, ...]:
    layers = []
    remaining = vertices
    while remaining:
        covered = 0
        for v in bits(remaining):
            covered |= succ.get(v, 0)
        layer = remaining & ~covered
        if not layer:
            raise InvariantError("cycle in a chain digraph; the layout is not of mim-width 1")
        layers.append(layer)
        remaining &= ~layer
    return tuple(layers)


def build_lower_digraphs(g: Graph, layout: RootedLayout) -> list[LayeredDigraph]:
    layout.check_graph(g)
    full = g.full_mask
    out: list[LayeredDigraph] = []
    for t in range(layout.size):
        vt = layout.masks[t]
        if layout.is_leaf(t):
            succ: dict[int, int] = {}
        else:
            succ = dict(out[layout.left[t]].succ)
            for v, s in out[layout.right[t]].succ.items():
                succ[v] = s
            for v, s in _containment_edges(g.adj, vt, full & ~vt).items():
                succ[v] = succ.get(v, 0) | s
        out.append(LayeredDigraph(vt, succ, _layers(vt, succ)))
    return out


def build_upper_digraphs(g: Graph, layout: RootedLayout) -> list[LayeredDigraph]:
    layout.check_graph(g)
    full = g.full_mask
    out: list[LayeredDigraph | None] = [None] * layout.size
    out[layout.root] = LayeredDigraph(0, {}, ())
    for t in reversed(range(layout.size)):
        parent = out[t]
        for c in layout.children(t):
            vc = layout.masks[c]
            outside = full & ~vc
            succ = dict(parent.succ)
            for v, s in _containment_edges(g.adj, outside, vc).items():
                succ[v] = succ.get(v, 0) | s
            out[c] = LayeredDigraph(outside, succ, _layers(outside, succ))
    return out


def extract_order(d: LayeredDigraph, tie_break: Sequence[int]) -> tuple[int, ...]:
    """Consume layers in index order, smallest tie-break vertex first."""
    rank = {v: i for i, v in enumerate(tie_break)}
    order: list[int] = []
    for layer in d.layers:
        order.extend(sorted(bits(layer), key=rank.__getitem__))
    return tuple(order)


@dataclass(frozen=True)
class ChainOrders:
    """Per-node lower orders (on V_t) and upper orders (outside V_t), smallest first."""

    lower: tuple[tuple[int, ...], ...]
    upper: tuple[tuple[int, ...], ...]
    base: tuple[int, ...]

    def lower_rank(self, t: int) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.lower[t])}

    def upper_rank(self, t: int) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.upper[t])}


def compute_chain_orders(g: Graph, layout: RootedLayout,
                         base: Sequence[int] | None = None) -> ChainOrders:
    base = tuple(range(g.n)) if base is None else tuple(base)
    if sorted(base) != list(range(g.n)):
        raise ValueError("base order must be a permutation of the vertices")
    lower = tuple(extract_order(d, base) for d in build_lower_digraphs(g, layout))
    root_order = lower[layout.root]
    upper = tuple(extract_order(d, root_order) for d in build_upper_digraphs(g, layout))
    return ChainOrders(lower, upper, base)


@dataclass(frozen=True)
class ChainCheck:
    ok: bool
    condition: str | None = None
    node: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _chain_violation(adj: Sequence[int], order: Sequence[int], far: int) -> tuple[int, int] | None:
    """First pair (v, w), v before w, with N(v) & far not inside N(w) & far."""
    seen = 0
    for j, w in enumerate(order):
        nw = adj[w] & far
        if seen & ~nw:
            for v in order[:j]:
                if adj[v] & far & ~nw:
                    return v, w
        seen |= nw
    return None


def _restrict(order: Sequence[int], mask: int) -> tuple[int, ...]:
    return tuple(v for v in order if mask >> v & 1)


def verify_chain_orders(g: Graph, layout: RootedLayout, orders: ChainOrders) -> ChainCheck:
    full = g.full_mask
    adj = g.adj
    for t in range(layout.size):
        vt = layout.masks[t]
        lo, up = orders.lower[t], orders.upper[t]
        if sorted(lo) != sorted(bits(vt)):
            return ChainCheck(False, "(l-1)", t, "lower order does not list V_t")
        if sorted(up) != sorted(bits(full & ~vt)):
            return ChainCheck(False, "(u-1)", t, "upper order does not list the complement of V_t")
        bad = _chain_violation(adj, lo, full & ~vt)
        if bad:
            return ChainCheck(False, "(l-1)", t, f"{bad[0]} before {bad[1]} breaks containment")
        bad = _chain_violation(adj, up, vt)
        if bad:
            return ChainCheck(False, "(u-1)", t, f"{bad[0]} before {bad[1]} breaks containment")
        p = layout.parent[t]
        if p < 0:
            continue
        vp = layout.masks[p]
        if _restrict(orders.lower[p], vt) != lo:
            return ChainCheck(False, "(l-2)", t, "lower order disagrees with the parent's")
        if _restrict(up, full & ~vp) != orders.upper[p]:
            return ChainCheck(False, "(u-2)", t, "upper order disagrees with the parent's")
        shared = vp & ~vt
        if _restrict(up, shared) != _restrict(orders.lower[p], shared):
            return ChainCheck(False, "(u-3)", t, "upper order disagrees with the parent's lower order")
    return ChainCheck(True)


def dump_orders(orders: ChainOrders, labels: Sequence[str]) -> str:
    lines = []
    for t, (lo, up) in enumerate(zip(orders.lower, orders.upper)):
        lines.append(f"node {t} lower: " + " ".join(labels[v] for v in lo))
        lines.append(f"node {t} upper: " + " ".join(labels[v] for v in up))
    return "\n".join(lines) + "\n"
