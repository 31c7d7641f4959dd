"""Brute-force ground truth: exhaustive subset, cover and layout enumeration."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InputError, SizeError
from .graph import Graph, bits, max_induced_matching_in_cut
from .layout import RootedLayout


@dataclass(frozen=True)
class OracleGuard:
    max_vertices: int = 16
    max_layout_vertices: int = 8
    max_cover_vertices: int = 20
    max_cross_edges: int = 64


GUARD = OracleGuard()

TWO_PART = {"polar": ("cluster", "cocluster"), "split": ("clique", "independent"),
            "bipartite": ("independent", "independent")}
ONE_PART = ("cluster", "cocluster", "clique", "independent", "p3bar-free", "k3bar-free")


@dataclass(frozen=True)
class OracleResult:
    size: int
    parts: tuple[frozenset[int], ...]

    @property
    def vertices(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for p in self.parts:
            out |= p
        return out


def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | (1 << v)


def property_table(g: Graph, prop: str) -> np.ndarray:
    """Boolean array indexed by vertex mask: does the induced subgraph have ``prop``?"""
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)

    def holds_both(u: int, v: int) -> np.ndarray:
        pm = (1 << u) | (1 << v)
        return (masks & pm) == pm

    pairs = list(combinations(range(n), 2))
    if prop == "cluster":
        for u, v in pairs:
            if g.has_edge(u, v):
                diff = _closed(g, u) ^ _closed(g, v)
                ok &= ~(holds_both(u, v) & ((masks & diff) != 0))
    elif prop in ("cocluster", "p3bar-free"):
        full = g.full_mask
        for u, v in pairs:
            if not g.has_edge(u, v):
                diff = (full & ~g.adj[u]) ^ (full & ~g.adj[v])
                ok &= ~(holds_both(u, v) & ((masks & diff) != 0))
    elif prop == "clique":
        for u, v in pairs:
            if not g.has_edge(u, v):
                ok &= ~holds_both(u, v)
    elif prop == "independent":
        for u, v in pairs:
            if g.has_edge(u, v):
                ok &= ~holds_both(u, v)
    elif prop == "k3bar-free":
        for u, v, w in combinations(range(n), 3):
            if not (g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w)):
                pm = (1 << u) | (1 << v) | (1 << w)
                ok &= (masks & pm) != pm
    elif prop == "connected":
        reach = masks & -masks
        for _ in range(n):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> v) & 1 == 1, g.adj[v], 0)
            reach = grown & masks
        ok = reach == masks
    else:
        raise InputError(f"unknown property {prop!r}")
    return ok


def _lex_smallest(cands: np.ndarray) -> int:
    return int(min(cands.tolist(), key=lambda m: tuple(bits(m))))


def brute_max_induced(problem: str, g: Graph, connected: bool = False,
                      guard: OracleGuard = GUARD) -> OracleResult:
    """Largest vertex set (or disjoint pair) satisfying ``problem`` by enumeration.

    Ties go to the lexicographically smallest sorted vertex tuple; for pairs
    the first part is the smallest mask that works.
    """
    if g.n > guard.max_vertices:
        raise SizeError(f"{g.n} vertices exceed the oracle guard of {guard.max_vertices}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    if problem in TWO_PART:
        p1, p2 = (property_table(g, p) for p in TWO_PART[problem])
        valid = np.zeros(1 << g.n, dtype=bool)
        second = masks[p2]
        for a in masks[p1].tolist():
            valid[a | second[(second & a) == 0]] = True
    elif problem in ONE_PART:
        valid = property_table(g, problem)
    else:
        raise InputError(f"unknown problem {problem!r}")
    if connected:
        valid &= property_table(g, "connected")
    sizes = np.bitwise_count(masks.astype(np.uint64)).astype(np.int64)
    best = int(sizes[valid].max())
    union = _lex_smallest(masks[valid & (sizes == best)])
    if problem not in TWO_PART:
        return OracleResult(best, (frozenset(bits(union)),))
    for a in range(union + 1):
        if a & ~union == 0 and p1[a] and p2[union ^ a]:
            return OracleResult(best, (frozenset(bits(a)), frozenset(bits(union ^ a))))
    raise AssertionError("unreachable: valid union without a partition")


def brute_min_deletion(problem: str, g: Graph, connected: bool = False,
                       guard: OracleGuard = GUARD) -> int:
    return g.n - brute_max_induced(problem, g, connected, guard).size


def brute_vertex_cover(h: Graph, k: int, guard: OracleGuard = GUARD) -> bool:
    if h.n > guard.max_cover_vertices:
        raise SizeError(f"{h.n} vertices exceed the vertex cover guard")
    edges = h.edges()
    for size in range(0, min(k, h.n) + 1):
        for cover in combinations(range(h.n), size):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in edges):
                return True
    return False


def unrooted_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every leaf-labelled unrooted binary tree on leaves ``0..n-1`` exactly once.

    Leaves are inserted one at a time by subdividing an edge; internal nodes
    are numbered from ``n`` upward.
    """
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return

    def grow(edges: list[tuple[int, int]], k: int, nxt: int):
        if k == n:
            yield edges
            return
        for i, (a, b) in enumerate(edges):
            new = edges[:i] + edges[i + 1:] + [(a, nxt), (nxt, b), (nxt, k)]
            yield from grow(new, k + 1, nxt + 1)

    yield from grow([(0, n), (1, n), (2, n)], 3, n + 1)


def _tree_cuts(edges: list[tuple[int, int]], n: int) -> list[int]:
    """Leaf mask on the far side of every edge, rooted at leaf 0."""
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    order, parent = [0], {0: -1}
    for x in order:
        for y in nbrs.get(x, []):
            if y not in parent:
                parent[y] = x
                order.append(y)
    below = {x: (1 << x if x < n else 0) for x in order}
    for x in reversed(order[1:]):
        below[parent[x]] |= below[x]
    return [below[x] for x in order[1:]]


def _rooted(edges: list[tuple[int, int]], n: int) -> RootedLayout:
    if n == 1:
        return RootedLayout.from_nested(0)
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)

    def build(x: int, frm: int):
        if x < n:
            return x
        kids = [y for y in nbrs[x] if y != frm]
        return (build(kids[0], x), build(kids[1], x))

    return RootedLayout.from_nested((0, build(nbrs[0][0], 0)))


def find_layout(g: Graph, w: int, guard: OracleGuard = GUARD) -> RootedLayout | None:
    """A layout of mim-width at most ``w``, found by trying every tree."""
    if g.n > guard.max_layout_vertices:
        raise SizeError(f"{g.n} vertices exceed the layout enumeration guard")
    if g.n == 0:
        return None
    full = g.full_mask
    cut_ok = [max_induced_matching_in_cut(g, a, w) <= w for a in range(full + 1)]
    for edges in unrooted_trees(g.n):
        if all(cut_ok[c] for c in _tree_cuts(edges, g.n)):
            return _rooted(edges, g.n)
    return None


def brute_mimwidth_le(g: Graph, w: int, guard: OracleGuard = GUARD) -> bool:
    if g.n <= 1:
        return True
    return find_layout(g, w, guard) is not None


def all_layouts(n: int) -> Iterator[RootedLayout]:
    """One rooted layout per unrooted tree shape on ``n`` labelled leaves."""
    for edges in unrooted_trees(n):
        yield _rooted(edges, n)
