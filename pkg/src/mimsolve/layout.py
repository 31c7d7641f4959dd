"""Rooted layouts (branch decompositions) and their mim-width validation."""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InputError, SizeError
from .graph import Graph, complement, cut_mim, is_chain_cut


class RootedLayout:
    """Rooted full binary tree whose leaves carry distinct vertices.

    Nodes are numbered in post-order, so children always precede their
    parent and the root is the last node.
    """

    def __init__(self, left: Sequence[int], right: Sequence[int], vertex: Sequence[int]):
        self.left = tuple(left)
        self.right = tuple(right)
        self.vertex = tuple(vertex)
        size = len(self.vertex)
        if not (len(self.left) == len(self.right) == size) or size == 0:
            raise InputError("malformed layout arrays")
        parent = [-1] * size
        for t in range(size):
            if self.vertex[t] >= 0:
                if self.left[t] != -1 or self.right[t] != -1:
                    raise InputError(f"leaf node {t} has children")
                continue
            a, b = self.left[t], self.right[t]
            if not (0 <= a < t and 0 <= b < t) or a == b:
                raise InputError(f"internal node {t} needs two earlier children")
            for c in (a, b):
                if parent[c] != -1:
                    raise InputError(f"node {c} has two parents")
                parent[c] = t
        roots = [t for t in range(size) if parent[t] == -1]
        if roots != [size - 1]:
            raise InputError("layout must be a single tree rooted at its last node")
        leaves = [v for v in self.vertex if v >= 0]
        if len(set(leaves)) != len(leaves):
            raise InputError("a vertex appears at two leaves")
        self.parent = tuple(parent)

    @classmethod
    def from_nested(cls, tree) -> RootedLayout:
        """Build from nested pairs, e.g. ``((0, 1), (2, 3))``."""
        left: list[int] = []
        right: list[int] = []
        vertex: list[int] = []
        # iterative post-order so deep caterpillars do not hit the recursion limit
        stack: list[tuple[object, bool]] = [(tree, False)]
        done: list[int] = []
        while stack:
            item, expanded = stack.pop()
            if isinstance(item, int):
                if item < 0:
                    raise InputError("vertices must be non-negative")
                left.append(-1)
                right.append(-1)
                vertex.append(item)
                done.append(len(vertex) - 1)
            elif not expanded:
                if not (isinstance(item, tuple) and len(item) == 2):
                    raise InputError(f"internal nodes must have exactly two children: {item!r}")
                stack.append((item, True))
                stack.append((item[1], False))
                stack.append((item[0], False))
            else:
                b = done.pop()
                a = done.pop()
                left.append(a)
                right.append(b)
                vertex.append(-1)
                done.append(len(vertex) - 1)
        return cls(left, right, vertex)

    def to_nested(self, t: int | None = None):
        t = self.root if t is None else t
        memo: dict[int, object] = {}
        for s in self.subtree_nodes(t):
            memo[s] = self.vertex[s] if self.is_leaf(s) else (memo[self.left[s]], memo[self.right[s]])
        return memo[t]

    @property
    def size(self) -> int:
        return len(self.vertex)

    @property
    def root(self) -> int:
        return len(self.vertex) - 1

    def is_leaf(self, t: int) -> bool:
        return self.vertex[t] >= 0

    def children(self, t: int) -> tuple[int, ...]:
        return () if self.is_leaf(t) else (self.left[t], self.right[t])

    def subtree_nodes(self, t: int) -> list[int]:
        """Nodes of the subtree at ``t`` in post-order."""
        out = []
        stack = [(t, False)]
        while stack:
            s, expanded = stack.pop()
            if self.is_leaf(s) or expanded:
                out.append(s)
            else:
                stack.extend([(s, True), (self.right[s], False), (self.left[s], False)])
        return out

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Bitmask of V_t for every node t."""
        out = [0] * self.size
        for t in range(self.size):
            out[t] = 1 << self.vertex[t] if self.is_leaf(t) else out[self.left[t]] | out[self.right[t]]
        return tuple(out)

    def vertices(self, t: int | None = None) -> frozenset[int]:
        m = self.masks[self.root if t is None else t]
        return frozenset(v for v in range(m.bit_length()) if m >> v & 1)

    def leaf_order(self) -> list[int]:
        """Vertices read left to right."""
        return [self.vertex[t] for t in self.subtree_nodes(self.root) if self.is_leaf(t)]

    def leaf_of(self, v: int) -> int:
        return self.vertex.index(v)

    def check_graph(self, g: Graph) -> None:
        if self.masks[self.root] != g.full_mask:
            raise InputError("layout leaves do not match the graph's vertex set")

    def cuts(self) -> list[tuple[int, int]]:
        """(node, V_t mask) for every non-root node, i.e. every tree edge."""
        return [(t, self.masks[t]) for t in range(self.size) if t != self.root]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RootedLayout) and self.left == other.left
                and self.right == other.right and self.vertex == other.vertex)

    def __hash__(self) -> int:
        return hash((self.left, self.right, self.vertex))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(leaves={self.leaf_order()})"


class LinearLayout(RootedLayout):
    """A caterpillar layout together with its vertex order."""

    def __init__(self, left, right, vertex, order: Sequence[int]):
        super().__init__(left, right, vertex)
        self.order = tuple(order)


def layout_from_order(order: Sequence[int]) -> LinearLayout:
    """Canonical caterpillar ``((((o0, o1), o2), o3) ...)`` for a vertex order."""
    order = list(order)
    if not order:
        raise InputError("cannot build a layout over zero vertices")
    if sorted(order) != list(range(len(order))):
        raise InputError("order must be a permutation of 0..n-1")
    return caterpillar(order)


def caterpillar(order: Sequence[int]) -> LinearLayout:
    """Caterpillar over any distinct vertex ids, without the permutation check."""
    left, right, vertex = [-1], [-1], [order[0]]
    spine = 0
    for v in order[1:]:
        left.append(-1)
        right.append(-1)
        vertex.append(v)
        leaf = len(vertex) - 1
        left.append(spine)
        right.append(leaf)
        vertex.append(-1)
        spine = len(vertex) - 1
    return LinearLayout(left, right, vertex, order)


def interval_layout(intervals: Sequence[tuple]) -> LinearLayout:
    """Layout ordering vertices by left endpoint, then right endpoint, then index."""
    keyed = sorted(range(len(intervals)),
                   key=lambda v: (Fraction(intervals[v][0]), Fraction(intervals[v][1]), v))
    return layout_from_order(keyed)


def permutation_layout(perm: Sequence[int]) -> LinearLayout:
    if sorted(perm) != list(range(len(perm))):
        raise InputError("not a permutation of 0..n-1")
    return layout_from_order(range(len(perm)))


@dataclass
class CotreeNode:
    """Node of a cotree: a leaf vertex, or a union ('U') / join ('J') of children."""

    label: str
    children: list[CotreeNode]
    vertex: int | None = None

    def leaves(self) -> list[int]:
        if self.vertex is not None:
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]


def _check_cotree(node: CotreeNode) -> None:
    if node.vertex is not None:
        if node.children:
            raise InputError("a cotree leaf cannot have children")
        return
    if node.label not in ("U", "J"):
        raise InputError(f"cotree internal label must be U or J, got {node.label!r}")
    if len(node.children) < 2:
        raise InputError("cotree internal nodes need at least two children")
    for c in node.children:
        _check_cotree(c)


def cotree_layout(cotree: CotreeNode) -> RootedLayout:
    """Binarize a cotree left to right and use its shape as the layout."""
    _check_cotree(cotree)

    def shape(node: CotreeNode):
        if node.vertex is not None:
            return node.vertex
        acc = shape(node.children[0])
        for c in node.children[1:]:
            acc = (acc, shape(c))
        return acc

    leaves = cotree.leaves()
    if sorted(leaves) != list(range(len(leaves))):
        raise InputError("cotree leaves must be the vertices 0..n-1 exactly once")
    return RootedLayout.from_nested(shape(cotree))


def cograph_from_cotree(cotree: CotreeNode) -> Graph:
    _check_cotree(cotree)
    n = len(cotree.leaves())
    edges = []

    def walk(node: CotreeNode) -> list[int]:
        if node.vertex is not None:
            return [node.vertex]
        groups = [walk(c) for c in node.children]
        if node.label == "J":
            for i, gi in enumerate(groups):
                for gj in groups[i + 1:]:
                    edges.extend((u, v) for u in gi for v in gj)
        return [v for grp in groups for v in grp]

    walk(cotree)
    return Graph(n, edges)


@dataclass
class WidthReport:
    """Outcome of a width check: per-edge cut values and the first failure."""

    ok: bool
    width: int
    failing_node: int | None
    values: dict[int, int]

    def __bool__(self) -> bool:
        return self.ok


def _cut_value(args: tuple[Graph, int, int]) -> int:
    g, mask, w = args
    if w <= 1:
        # 0 if no cross edge, 1 if chain, 2 otherwise
        if not is_chain_cut(g, mask):
            return 2
        out = g.full_mask & ~mask
        return int(any(g.adj[v] & out for v in range(g.n) if mask >> v & 1))
    return cut_mim(g, mask, w)


def validate_width(g: Graph, layout: RootedLayout, w: int, *, workers: int | None = None,
                   max_vertices: int = 4096) -> WidthReport:
    """Check that every cut of ``layout`` has induced-matching number at most ``w``.

    ``values`` maps each non-root node to its cut value, capped at ``w + 1``.
    Width 1 uses the chain-graph test.  Larger widths use an exact twin-class
    search, refused above ``max_vertices`` vertices.
    """
    layout.check_graph(g)
    if w >= 2 and g.n > max_vertices:
        raise SizeError(f"width-{w} validation is limited to {max_vertices} vertices")
    cuts = layout.cuts()
    workers = resolve_workers(workers)
    jobs = [(g, mask, w) for _, mask in cuts]
    if workers > 1 and len(jobs) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            vals = list(pool.map(_cut_value, jobs, chunksize=16))
    else:
        vals = [_cut_value(j) for j in jobs]
    values = {t: min(v, w + 1) for (t, _), v in zip(cuts, vals)}
    failing = next((t for t, v in values.items() if v > w), None)
    width = max(values.values(), default=0)
    return WidthReport(failing is None, width, failing, values)


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("MIMSOLVE_THREADS", "1") or 1)
    return max(1, workers)


def complement_reuse_check(g: Graph, layout: RootedLayout) -> bool:
    if not validate_width(g, layout, 1):
        raise InputError("layout does not have mim-width at most 1 for the graph")
    return validate_width(complement(g), layout, 1).ok


def _disjoint(a: RootedLayout, b: RootedLayout) -> None:
    if a.masks[a.root] & b.masks[b.root]:
        raise InputError("layouts share vertices")


def concatenate(a: LinearLayout, b: LinearLayout) -> LinearLayout:
    """Join two caterpillars end to end.

    The last leaf edge of ``a`` and the first leaf edge of ``b`` are each
    subdivided and the two new nodes are linked; the result is again a
    caterpillar whose vertex order is ``a.order`` followed by ``b.order``,
    rooted in canonical form.
    """
    _disjoint(a, b)
    return caterpillar(list(a.order) + list(b.order))


def graft(a: RootedLayout, b: RootedLayout) -> RootedLayout:
    """New root whose children are the roots of ``a`` and ``b``."""
    _disjoint(a, b)
    off = a.size
    left = list(a.left) + [x + off if x >= 0 else -1 for x in b.left] + [a.root]
    right = list(a.right) + [x + off if x >= 0 else -1 for x in b.right] + [b.root + off]
    vertex = list(a.vertex) + list(b.vertex) + [-1]
    return RootedLayout(left, right, vertex)


def restrict_layout(layout: RootedLayout, keep: Iterable[int]) -> RootedLayout:
    """Delete the leaves outside ``keep`` and smooth the resulting degree-2 nodes.

    Kept vertices are renumbered ``0..k-1`` in increasing order, matching
    :func:`mimsolve.graph.induced_subgraph`.
    """
    keep = sorted(set(keep))
    if not keep:
        raise InputError("cannot keep zero vertices")
    index = {v: i for i, v in enumerate(keep)}
    memo: dict[int, object] = {}
    for t in range(layout.size):
        if layout.is_leaf(t):
            v = layout.vertex[t]
            memo[t] = index[v] if v in index else None
        else:
            a, b = memo[layout.left[t]], memo[layout.right[t]]
            memo[t] = a if b is None else b if a is None else (a, b)
    return RootedLayout.from_nested(memo[layout.root])
