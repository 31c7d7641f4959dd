"""Hard instances from Vertex Cover on graphs of girth at least 7.

Each vertex-cover instance H is blown up into ell*n disjoint copies; every
vertex receives a copy of F' (F minus the block F11, keeping c1) and every
edge a copy of F11 glued along c1 and d.  The output graph is the
complement of the result, and a vertex cover of size k in H corresponds to
a deletion set of size k*ell*n.  A linear layout is assembled by
concatenating one layout per gadget, which keeps its mim-width at most 2
for the three presets below.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import InputError, PreconditionError, SizeError
from .graph import Graph, bits, complement, components_mask, disjoint_union, to_mask
from .layout import LinearLayout, WidthReport, caterpillar, concatenate, layout_from_order, validate_width
from .oracles import OracleGuard, brute_max_induced, brute_min_deletion, brute_vertex_cover

SANITY_GUARD = 18


def _as_tuple(seq):
    return tuple(_as_tuple(x) for x in seq) if isinstance(seq, (list, tuple)) else seq


def alpha_sequence(h: Graph, component: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically smallest block profile over the cut vertices of a component.

    For a cut vertex c the profile lists, in non-increasing order, the sizes
    of the pieces left by removing c, each counted together with c.
    """
    mask = to_mask(component, h.n)
    if not mask or len(components_mask(h.adj, mask)) != 1:
        raise InputError("alpha_sequence needs a non-empty connected vertex set")
    best = None
    for c in bits(mask):
        pieces = components_mask(h.adj, mask & ~(1 << c))
        if len(pieces) < 2:
            continue
        seq = tuple(sorted((p.bit_count() + 1 for p in pieces), reverse=True))
        if best is None or seq < best:
            best = seq
    return best if best is not None else (mask.bit_count(),)


def beta_sequence(h: Graph) -> tuple[tuple[int, ...], ...]:
    alphas = [alpha_sequence(h, bits(c)) for c in components_mask(h.adj, h.full_mask)]
    return tuple(sorted(alphas, reverse=True))


def lex_less(a, b) -> bool:
    """Strict lexicographic comparison; a proper prefix is smaller."""
    return _as_tuple(a) < _as_tuple(b)


def girth(h: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(h.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in h.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


@dataclass(frozen=True)
class ForbiddenBase:
    """Gadget data for one problem.

    ``fprime_order`` and ``f11_order`` list the gadget's new vertices in the
    order used for its linear layout; the glued vertices are left out and
    sit at the start of the gadget's good layout.
    """

    name: str
    problem: str
    F: Graph
    f11: frozenset[int]
    c1: int
    d: int
    ell: int
    fprime_order: tuple[int, ...]
    f11_order: tuple[int, ...]
    width_bound: int = 2

    def __post_init__(self):
        if not self.F.has_edge(self.c1, self.d) or not {self.c1, self.d} <= self.f11:
            raise InputError("d must be a neighbour of c1 inside F11")
        fprime = self.fprime_vertices
        if set(self.fprime_order) != fprime - {self.c1}:
            raise InputError("fprime_order must list the vertices of F' other than c1")
        if set(self.f11_order) != self.f11 - {self.c1, self.d}:
            raise InputError("f11_order must list the vertices of F11 other than c1 and d")

    @property
    def fprime_vertices(self) -> frozenset[int]:
        return frozenset(range(self.F.n)) - (self.f11 - {self.c1})


_K2 = Graph(2, [(0, 1)])
_POLAR_F = Graph(6, [(0, 1), (0, 2), (1, 2), (1, 3), (0, 3), (0, 4), (4, 5), (5, 0)])

PRESETS: dict[str, ForbiddenBase] = {
    "clique": ForbiddenBase("clique", "clique", _K2, frozenset({0, 1}), 0, 1, 1, (), ()),
    "cluster": ForbiddenBase("cluster", "cluster", _K2, frozenset({0, 1}), 0, 1, 2, (), ()),
    "polar": ForbiddenBase("polar", "polar", _POLAR_F, frozenset({0, 1, 2, 3}), 0, 1, 2,
                           (4, 5), (2, 3)),
}


def forbidden_multiplicity(F: Graph, problem: str, limit: int = 4) -> int:
    """Smallest ell such that the complement of ell disjoint copies of F is not a solution."""
    for ell in range(1, limit + 1):
        g = complement(disjoint_union([F] * ell))
        if brute_max_induced(problem, g).size < g.n:
            return ell
    raise InputError(f"no multiplicity up to {limit} breaks {problem}")


@dataclass
class Reduction:
    base: ForbiddenBase
    h_vc: Graph
    graph: Graph
    hprime: Graph
    layout: LinearLayout
    copies: int
    gadget_sizes: list[int] = field(default_factory=list)

    def threshold(self, k: int) -> int:
        return k * self.base.ell * self.h_vc.n

    def threshold_map(self) -> dict[int, int]:
        return {k: self.threshold(k) for k in range(self.h_vc.n + 1)}


def check_vc_instance(h_vc: Graph) -> None:
    if h_vc.n < 2 or h_vc.m < 1:
        raise PreconditionError("the vertex cover instance needs at least two vertices and one edge")
    g = girth(h_vc)
    if g < 7:
        raise PreconditionError(f"the vertex cover instance has girth {g}, below 7")


def build_reduction(h_vc: Graph, base: ForbiddenBase | str) -> Reduction:
    if isinstance(base, str):
        if base not in PRESETS:
            raise InputError(f"unknown preset {base!r}; choose from {sorted(PRESETS)}")
        base = PRESETS[base]
    check_vc_instance(h_vc)
    n = h_vc.n
    copies = base.ell * n
    edges: list[tuple[int, int]] = []
    for i in range(copies):
        edges.extend((i * n + u, i * n + v) for u, v in h_vc.edges())
    star_size = copies * n
    layout = layout_from_order(range(star_size))
    count = star_size
    sizes = []
    f_edges = base.F.edges()

    def attach(glue: dict[int, int], new_order: tuple[int, ...], inside: frozenset[int]) -> None:
        nonlocal count, layout
        ids = dict(glue)
        for x in new_order:
            ids[x] = count
            count += 1
        edges.extend((ids[a], ids[b]) for a, b in f_edges if a in inside and b in inside)
        sizes.append(len(new_order))
        if new_order:
            piece = caterpillar([ids[x] for x in new_order])
            layout = concatenate(layout, piece)

    h_star_edges = list(edges)
    fprime = base.fprime_vertices
    for u in range(star_size):
        attach({base.c1: u}, base.fprime_order, fprime)
    for u, v in h_star_edges:
        attach({base.c1: u, base.d: v}, base.f11_order, base.f11)
    hprime = Graph(count, edges)
    return Reduction(base, h_vc, complement(hprime), hprime, layout, copies, sizes)


def certify_reduction(red: Reduction) -> WidthReport:
    return validate_width(red.graph, red.layout, red.base.width_bound)


def reduction_sanity(h_vc: Graph, base: ForbiddenBase | str, k: int) -> bool:
    """Exhaustively confirm: VC(h_vc) <= k iff the deletion number is <= k*ell*n."""
    red = build_reduction(h_vc, base)
    if red.graph.n > SANITY_GUARD:
        raise SizeError(f"reduction has {red.graph.n} vertices, above the guard of {SANITY_GUARD}")
    has_cover = brute_vertex_cover(h_vc, k)
    guard = OracleGuard(max_vertices=SANITY_GUARD)
    small_deletion = brute_min_deletion(red.base.problem, red.graph, guard=guard) <= red.threshold(k)
    return has_cover == small_deletion


def manifest(red: Reduction, report: WidthReport | None = None) -> dict:
    report = certify_reduction(red) if report is None else report
    return {
        "preset": red.base.name,
        "n": red.h_vc.n,
        "ell": red.base.ell,
        "threshold_map": {str(k): v for k, v in red.threshold_map().items()},
        "certified_width": report.width if report.ok else None,
        "vertices": red.graph.n,
    }
