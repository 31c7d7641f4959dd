"""Simple undirected graphs over dense vertex indices, plus cut primitives.

Vertex sets are exchanged as iterables of ints in the public API and
handled internally as Python int bitmasks (bit ``v`` set iff ``v`` is a
member).  Every function here is pure.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations

from .errors import ContractError, InputError, SizeError

CROSS_EDGE_GUARD = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Adjacency is kept twice: as sorted neighbour tuples and as one bitmask
    row per vertex, which is what the inner loops use.
    """

    __slots__ = ("n", "adj", "_nbrs", "_labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._init(n, rows, labels)

    def _init(self, n: int, rows: list[int], labels: Sequence[str] | None) -> None:
        self.n = n
        self.adj: tuple[int, ...] = tuple(rows)
        self._nbrs = tuple(tuple(bits(r)) for r in rows)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError("label count does not match vertex count")
            if len(set(labels)) != n:
                raise InputError("vertex labels must be distinct")
        self._labels = labels

    @classmethod
    def from_masks(cls, rows: Sequence[int], labels: Sequence[str] | None = None) -> Graph:
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise InputError(f"bad adjacency row for vertex {v}")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._init(n, list(rows), labels)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(len(x) for x in self._nbrs) // 2

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v + 1)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.label(v) for v in range(self.n))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def to_mask(vertices: Iterable[int] | int, n: int) -> int:
    """Convert an iterable of vertices (or an existing mask) to a bitmask."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> n:
            raise InputError("vertex mask out of range")
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = [(full ^ r) & ~(1 << v) for v, r in enumerate(g.adj)]
    return Graph.from_masks(rows, g.labels if g.has_labels else None)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[s]`` and the list mapping new indices to old ones."""
    keep = sorted(from_mask(to_mask(s, g.n)))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(sum(1 << index[u] for u in g.neighbors(v) if u in index))
    labels = [g.label(v) for v in keep] if g.has_labels else None
    return Graph.from_masks(rows, labels), keep


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.adj)
        offset += h.n
    return Graph.from_masks(rows)


def components_mask(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as masks."""
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= adj[v]
            frontier = grown & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    return len(components_mask(adj, mask)) <= 1


def component_partition(g: Graph, s: Iterable[int], order: Sequence[int]) -> list[frozenset[int]]:
    """Components of ``g[s]`` listed by strictly decreasing head.

    The head of a component is its largest vertex under ``order`` (which
    lists vertices from smallest to largest).
    """
    mask = to_mask(s, g.n)
    rank = {v: i for i, v in enumerate(order)}
    missing = [v for v in bits(mask) if v not in rank]
    if missing:
        raise InputError(f"order does not cover vertices {missing}")
    comps = [from_mask(c) for c in components_mask(g.adj, mask)]
    comps.sort(key=lambda c: max(rank[v] for v in c), reverse=True)
    return comps


def is_cluster_mask(adj: Sequence[int], mask: int) -> bool:
    """Every component of the induced subgraph is complete."""
    for v in bits(mask):
        closed = (adj[v] & mask) | (1 << v)
        for u in bits(adj[v] & mask):
            if (adj[u] & mask) | (1 << u) != closed:
                return False
    return True


def is_clique_mask(adj: Sequence[int], mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def is_independent_mask(adj: Sequence[int], mask: int) -> bool:
    return all(adj[v] & mask == 0 for v in bits(mask))


def _complement_rows(adj: Sequence[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    return [(full ^ r) & ~(1 << v) for v, r in enumerate(adj)]


def is_cocluster_mask(adj: Sequence[int], mask: int) -> bool:
    return is_cluster_mask(_complement_rows(adj), mask)


def is_bipartite_mask(adj: Sequence[int], mask: int) -> bool:
    colour: dict[int, int] = {}
    for start in bits(mask):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(adj[v] & mask):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def cross_neighborhoods(g: Graph, a: int) -> list[tuple[int, int]]:
    """Pairs (v, N(v) minus a) for every v in the mask ``a``."""
    out = g.full_mask & ~a
    return [(v, g.adj[v] & out) for v in bits(a)]


def is_chain_cut(g: Graph, a: Iterable[int]) -> bool:
    """True iff the bipartite graph between ``a`` and its complement is a chain graph."""
    mask = to_mask(a, g.n)
    nbhds = sorted((x for _, x in cross_neighborhoods(g, mask)), key=popcount)
    return all(small & ~big == 0 for small, big in zip(nbhds, nbhds[1:]))


def max_induced_matching_in_cut(g: Graph, a: Iterable[int], cap: int) -> int:
    """Size of a largest induced matching across the cut, capped at ``cap + 1``.

    Plain exhaustive search over sets of cross edges; refuses cuts with more
    than 64 cross edges.
    """
    mask = to_mask(a, g.n)
    out = g.full_mask & ~mask
    edges = [(x, y) for x in bits(mask) for y in bits(g.adj[x] & out)]
    if len(edges) > CROSS_EDGE_GUARD:
        raise SizeError(f"{len(edges)} cross edges exceed the guard of {CROSS_EDGE_GUARD}")
    limit = cap + 1
    best = 0

    def extend(chosen: list[tuple[int, int]], start: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if best >= limit:
            return
        for i in range(start, len(edges)):
            x, y = edges[i]
            if all(x != x2 and y != y2 and not g.has_edge(x, y2) and not g.has_edge(x2, y)
                   for x2, y2 in chosen):
                chosen.append((x, y))
                extend(chosen, i + 1)
                chosen.pop()
                if best >= limit:
                    return

    extend([], 0)
    return min(best, limit)


def cut_mim(g: Graph, a: Iterable[int], cap: int) -> int:
    """Exact induced-matching number of the cut, capped at ``cap + 1``.

    Works on twin classes of the ``a`` side: vertices with equal cross
    neighbourhoods can never both be matched.  A set x_1..x_k of ``a``-side
    vertices extends to an induced matching iff every x_i keeps a private
    cross neighbour, so the search runs over such sets.  For k >= 3 any two
    chosen vertices must share a cross non-neighbour that is adjacent to a
    third one, which is what keeps dense cuts tractable.
    """
    mask = to_mask(a, g.n)
    if mask == 0 or mask == g.full_mask:
        return 0
    classes = sorted({x for _, x in cross_neighborhoods(g, mask) if x})
    if not classes:
        return 0
    if cap < 1:
        return 1
    if not _is_chain(classes):
        found = 2
    else:
        return 1
    for k in range(3, cap + 2):
        if not _has_private_family(classes, k):
            return found
        found = k
    return found


def _is_chain(nbhds: list[int]) -> bool:
    nbhds = sorted(nbhds, key=popcount)
    return all(s & ~b == 0 for s, b in zip(nbhds, nbhds[1:]))


def _has_private_family(classes: list[int], k: int) -> bool:
    c = len(classes)
    if c < k:
        return False
    reach = 0
    for x in classes:
        reach |= x
    # co-neighbourhood of each class inside the reachable far side
    co = [reach & ~x for x in classes]
    sparse_co = sum(map(popcount, co)) <= sum(map(popcount, classes))
    if sparse_co:
        by_far: dict[int, int] = {}
        for i, nb in enumerate(co):
            for y in bits(nb):
                by_far[y] = by_far.get(y, 0) | (1 << i)
        compat = []
        for i in range(c):
            m = 0
            for y in bits(co[i]):
                m |= by_far[y]
            compat.append(m & ~(1 << i))
    else:
        everyone = (1 << c) - 1
        compat = [everyone & ~(1 << i) for i in range(c)]

    def search(chosen: list[int], privates: list[int], union: int, cand: int) -> bool:
        if len(chosen) == k:
            return True
        for i in bits(cand):
            nb = classes[i]
            own = nb & ~union
            if not own:
                continue
            new_priv = [p & ~nb for p in privates]
            if not all(new_priv):
                continue
            rest = cand & compat[i] & ~((1 << (i + 1)) - 1)
            if popcount(rest) < k - len(chosen) - 1:
                continue
            chosen.append(i)
            if search(chosen, new_priv + [own], union | nb, rest):
                return True
            chosen.pop()
        return False

    return search([], [], 0, (1 << c) - 1)


PROBLEM_KINDS = ("cluster", "cocluster", "clique", "independent", "polar", "split",
                 "bipartite", "p3bar-free", "k3bar-free")


def _has_independent_triple(adj: Sequence[int], mask: int) -> bool:
    for u, v, w in combinations(list(bits(mask)), 3):
        if not (adj[u] >> v & 1 or adj[u] >> w & 1 or adj[v] >> w & 1):
            return True
    return False


def certify(problem: str, g: Graph, solution, connected: bool = False) -> bool:
    """Check a solution against the definition of ``problem``.

    ``solution`` is one vertex collection, or a pair of disjoint ones for the
    two-part problems (polar, split, bipartite, and k3bar-free given as two
    cliques).  With ``connected`` the union must induce a connected graph;
    the empty set counts as connected.
    """
    if problem not in PROBLEM_KINDS:
        raise InputError(f"unknown problem kind {problem!r}")
    adj = g.adj
    parts = _as_parts(solution, g.n)
    if len(parts) == 2 and parts[0] & parts[1]:
        raise ContractError("solution parts must be disjoint")
    union = 0
    for p in parts:
        union |= p
    if connected and not is_connected_mask(adj, union):
        return False
    co = _complement_rows(adj)
    if problem in ("polar", "split", "bipartite") and len(parts) != 2:
        raise ContractError(f"{problem} expects two parts")
    if problem == "cluster":
        return is_cluster_mask(adj, union)
    if problem in ("cocluster", "p3bar-free"):
        return is_cluster_mask(co, union)
    if problem == "clique":
        return is_clique_mask(adj, union)
    if problem == "independent":
        return is_independent_mask(adj, union)
    if problem == "polar":
        return is_cluster_mask(adj, parts[0]) and is_cluster_mask(co, parts[1])
    if problem == "split":
        return is_clique_mask(adj, parts[0]) and is_independent_mask(adj, parts[1])
    if problem == "bipartite":
        if len(parts) == 2:
            return is_independent_mask(adj, parts[0]) and is_independent_mask(adj, parts[1])
        return is_bipartite_mask(adj, union)
    # k3bar-free: no three pairwise non-adjacent vertices
    if len(parts) == 2:
        return is_clique_mask(adj, parts[0]) and is_clique_mask(adj, parts[1])
    return not _has_independent_triple(adj, union)


def _as_parts(solution, n: int) -> list[int]:
    if isinstance(solution, (tuple, list)) and solution and not isinstance(solution[0], int):
        return [to_mask(p, n) for p in solution]
    return [to_mask(solution, n)]
