"""Dynamic programming over width-1 layouts for the induced-subgraph catalog.

Each problem is a composition of *trackers*, one per solution part (cluster,
co-cluster, independent, clique), plus an optional connectivity tracker on
the union of the parts.  A DP state at node t is the tuple of tracker
representatives of a partial solution inside V_t.

Only inner states are stored.  Two partial solutions with the same
representative behave identically against every outer set, so the value of
an (inner, outer) pair is the stored inner value when their union is
feasible and minus infinity otherwise; :meth:`DPTable.value` evaluates that.

With ``prune=True`` states are further merged when their representative
vertices have the same neighbourhoods outside V_t, which is all that
future feasibility depends on.
"""

from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass, field

from .chain import ChainOrders, compute_chain_orders
from .errors import InputError, InvariantError, WidthError
from .graph import Graph, bits, certify, complement, components_mask
from .layout import RootedLayout, validate_width
from .reps import RepKind, empty_rep


@dataclass(frozen=True)
class ProblemSpec:
    """A catalog problem: one tracker kind per part and optional filters.

    ``single[i]`` restricts part i to at most one component (of the graph
    for cluster parts, of the complement for co-cluster parts).
    """

    name: str
    parts: tuple[RepKind, ...]
    single: tuple[bool, ...]
    certify_as: str
    connected: bool = False
    complement: bool = False

    def with_connected(self, connected: bool) -> ProblemSpec:
        return ProblemSpec(self.name, self.parts, self.single, self.certify_as,
                           connected, self.complement)


_C, _CC = RepKind.CLUSTER, RepKind.COCLUSTER
CATALOG: dict[str, ProblemSpec] = {
    "cluster": ProblemSpec("cluster", (_C,), (False,), "cluster"),
    "clique": ProblemSpec("clique", (_C,), (True,), "clique"),
    "polar": ProblemSpec("polar", (_C, _CC), (False, False), "polar"),
    "split": ProblemSpec("split", (_C, _CC), (True, True), "split"),
    "p3bar-free": ProblemSpec("p3bar-free", (_CC,), (False,), "p3bar-free", complement=True),
    "k3bar-free": ProblemSpec("k3bar-free", (RepKind.COINDEPENDENT,) * 2, (False, False),
                              "k3bar-free", complement=True),
}
EXTRA: dict[str, ProblemSpec] = {
    "bipartite": ProblemSpec("bipartite", (RepKind.INDEPENDENT,) * 2, (False, False), "bipartite"),
}


def problem_spec(name: str, connected: bool = False) -> ProblemSpec:
    spec = CATALOG.get(name) or EXTRA.get(name)
    if spec is None:
        raise InputError(f"unknown problem {name!r}; choose from {sorted(CATALOG)}")
    return spec.with_connected(connected)


class _Tracker:
    """Representative arithmetic for one kind under the global chain order."""

    def __init__(self, kind: RepKind, g_adj: Sequence[int], co_adj: Sequence[int],
                 rank: Sequence[int]):
        self.kind = kind
        self.adj = co_adj if kind.flipped else g_adj
        self.key = [-r for r in rank] if kind.flipped else list(rank)
        self.empty = empty_rep(kind)
        self.is_cluster = kind in (RepKind.CLUSTER, RepKind.COCLUSTER)
        self.is_conn = kind is RepKind.CONNECTIVITY
        self._memo: dict[tuple, tuple | None] = {}

    def leaf(self, v: int) -> tuple:
        if self.is_cluster:
            return (v, v, None)
        if self.is_conn:
            return (v, v)
        return (v,)

    def combine(self, ra: tuple, rb: tuple) -> tuple | None:
        empty = self.empty
        if rb == empty:
            return ra
        if ra == empty:
            return rb
        memo_key = (ra, rb)
        hit = self._memo.get(memo_key, False)
        if hit is not False:
            return hit
        mask = 0
        for v in ra:
            if v is not None:
                mask |= 1 << v
        for v in rb:
            if v is not None:
                mask |= 1 << v
        res = self._rep(mask)
        self._memo[memo_key] = res
        return res

    def _rep(self, mask: int) -> tuple | None:
        adj, key = self.adj, self.key
        if self.is_conn:
            heads = [max(bits(c), key=key.__getitem__) for c in components_mask(adj, mask)]
            return (max(heads, key=key.__getitem__), min(heads, key=key.__getitem__))
        if not self.is_cluster:
            for v in bits(mask):
                if adj[v] & mask:
                    return None
            return (max(bits(mask), key=key.__getitem__),)
        for v in bits(mask):
            closed = (adj[v] & mask) | (1 << v)
            for u in bits(adj[v] & mask):
                if (adj[u] & mask) | (1 << u) != closed:
                    return None
        vs = sorted(bits(mask), key=key.__getitem__, reverse=True)
        h1 = vs[0]
        comp = (adj[h1] & mask) | (1 << h1)
        t1, h2 = h1, None
        for v in vs[1:]:
            if comp >> v & 1:
                t1 = v
            elif h2 is None:
                h2 = v
        return (h1, t1, h2)


@dataclass
class Solution:
    problem: str
    connected: bool
    size: int
    parts: tuple[frozenset[int], ...]
    certified: bool
    stats: dict = field(default_factory=dict)
    table: DPTable | None = None

    @property
    def vertices(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for p in self.parts:
            out |= p
        return out


class DPTable:
    """Per-node tables mapping a state key to (value, representatives, backref).

    A backref is ``("leaf", part)`` with part ``-1`` for exclusion, or
    ``(key_left, key_right)`` for internal nodes.
    """

    def __init__(self, g: Graph, layout: RootedLayout, spec: ProblemSpec,
                 orders: ChainOrders, prune: bool):
        self.g = g
        self.layout = layout
        self.spec = spec
        self.orders = orders
        self.prune = prune
        root_order = orders.lower[layout.root]
        rank = [0] * g.n
        for i, v in enumerate(root_order):
            rank[v] = i
        co = complement(g).adj
        self.trackers = [_Tracker(k, g.adj, co, rank) for k in spec.parts]
        if spec.connected:
            self.trackers.append(_Tracker(RepKind.CONNECTIVITY, g.adj, co, rank))
        self.tables: list[dict] = [dict() for _ in range(layout.size)]
        self.caps: list[int] = [0] * layout.size

    def key(self, t: int, reps: tuple) -> tuple:
        if not self.prune:
            return reps
        out = self.g.full_mask & ~self.layout.masks[t]
        adj = self.g.adj
        parts = []
        for tr, rep in zip(self.trackers, reps):
            sig = tuple(-1 if v is None else adj[v] & out for v in rep)
            if tr.is_conn:
                sig += (rep[0] == rep[1],)
            parts.append(sig)
        return tuple(parts)

    def _alive(self, t: int, reps: tuple) -> bool:
        """Intermediate filters that are final once violated."""
        spec = self.spec
        for i, single in enumerate(spec.single):
            if single and self.trackers[i].is_cluster and reps[i][2] is not None:
                return False
        if spec.connected:
            first, last = reps[-1]
            if first != last:
                out = self.g.full_mask & ~self.layout.masks[t]
                if not self.g.adj[last] & out:
                    return False
        return True

    def _root_ok(self, reps: tuple) -> bool:
        for i, single in enumerate(self.spec.single):
            if single and self.trackers[i].is_cluster and reps[i][2] is not None:
                return False
        if self.spec.connected:
            first, last = reps[-1]
            if first != last:
                return False
        return True

    def _cap(self, t: int) -> int:
        k = self.layout.masks[t].bit_count() + 1
        cap = 1
        for tr in self.trackers:
            cap *= k ** tr.kind.slots * (2 if tr.is_conn else 1)
        return cap

    def _store(self, t: int, table: dict, value: int, reps: tuple, back) -> None:
        if self.prune and not self._alive(t, reps):
            return
        k = self.key(t, reps)
        cur = table.get(k)
        if cur is None or value > cur[0]:
            table[k] = (value, reps, back)

    def run(self) -> None:
        layout = self.layout
        trackers = self.trackers
        nparts = len(self.spec.parts)
        empty = tuple(tr.empty for tr in trackers)
        for t in range(layout.size):
            table = self.tables[t]
            if layout.is_leaf(t):
                v = layout.vertex[t]
                self._store(t, table, 0, empty, ("leaf", -1))
                for i in range(nparts):
                    reps = list(empty)
                    reps[i] = trackers[i].leaf(v)
                    if self.spec.connected:
                        reps[-1] = trackers[-1].leaf(v)
                    self._store(t, table, 1, tuple(reps), ("leaf", i))
            else:
                left = self.tables[layout.left[t]]
                right = self.tables[layout.right[t]]
                for ka, (va, ra, _) in left.items():
                    for kb, (vb, rb, _) in right.items():
                        reps = []
                        for tr, x, y in zip(trackers, ra, rb):
                            r = tr.combine(x, y)
                            if r is None:
                                break
                            reps.append(r)
                        else:
                            self._store(t, table, va + vb, tuple(reps), (ka, kb))
            cap = self._cap(t)
            self.caps[t] = cap
            if len(table) > cap:
                raise InvariantError(f"node {t} holds {len(table)} states, above the cap {cap}")

    def root_states(self) -> list[tuple]:
        root = self.tables[self.layout.root]
        return [k for k, (_, reps, _) in root.items() if self._root_ok(reps)]

    def best_root_key(self):
        root = self.tables[self.layout.root]
        best = None
        for k in self.root_states():
            if best is None or root[k][0] > root[best][0]:
                best = k
        return best

    def value(self, t: int, inner: tuple, outer: tuple | None = None) -> int | None:
        """Largest partial solution in V_t with representatives ``inner`` that is
        compatible with an outer set whose part representatives are ``outer``.

        ``None`` stands for minus infinity.  Without pruning the stored value
        is exact for the given representatives; with pruning it is the value
        of the merged class the representatives fall into.
        """
        entry = self.tables[t].get(self.key(t, tuple(tuple(r) for r in inner)))
        if entry is None:
            return None
        if outer is not None:
            for tr, r, o in zip(self.trackers, inner, outer):
                if not tr.is_conn and tr.combine(tuple(r), tuple(o)) is None:
                    return None
        return entry[0]

    def reconstruct(self, root_key) -> tuple[frozenset[int], ...]:
        layout = self.layout
        nparts = len(self.spec.parts)
        parts: list[set[int]] = [set() for _ in range(nparts)]
        stack = [(layout.root, root_key)]
        while stack:
            t, k = stack.pop()
            entry = self.tables[t].get(k)
            if entry is None:
                raise InvariantError(f"dangling backreference at node {t}")
            back = entry[2]
            if back[0] == "leaf":
                if back[1] >= 0:
                    parts[back[1]].add(layout.vertex[t])
            else:
                stack.append((layout.left[t], back[0]))
                stack.append((layout.right[t], back[1]))
        return tuple(frozenset(p) for p in parts)


def solve(g: Graph, layout: RootedLayout | None, spec: ProblemSpec | str, *,
          connected: bool | None = None, prune: bool = True,
          orders: ChainOrders | None = None, check_width: bool = True) -> Solution:
    """Maximum solution of ``spec`` on ``g`` using a layout of mim-width at most 1."""
    if isinstance(spec, str):
        spec = problem_spec(spec, bool(connected))
    elif connected is not None:
        spec = spec.with_connected(connected)
    start = time.perf_counter()
    if g.n == 0:
        empty = tuple(frozenset() for _ in spec.parts)
        return Solution(spec.name, spec.connected, 0, empty, True,
                        {"nodes": 0, "states": 0, "max_states": 0, "runtime_ms": 0.0})
    if layout is None:
        raise InputError("a layout is required for a non-empty graph")
    layout.check_graph(g)
    if check_width:
        target = complement(g) if spec.complement else g
        report = validate_width(target, layout, 1)
        if not report:
            raise WidthError(f"cut at node {report.failing_node} is not a chain graph",
                             report.failing_node)
    if orders is None:
        orders = compute_chain_orders(g, layout)
    table = DPTable(g, layout, spec, orders, prune)
    table.run()
    best = table.best_root_key()
    if best is None:
        raise InvariantError("no feasible root state, although the empty set always qualifies")
    size = table.tables[layout.root][best][0]
    parts = table.reconstruct(best)
    if sum(len(p) for p in parts) != size:
        raise InvariantError("reconstructed witness size differs from the table value")
    sol_arg = parts if len(parts) > 1 else parts[0]
    ok = certify(spec.certify_as, g, sol_arg, connected=spec.connected)
    states = [len(t) for t in table.tables]
    stats = {"nodes": layout.size, "states": sum(states), "max_states": max(states),
             "runtime_ms": round((time.perf_counter() - start) * 1000, 3)}
    return Solution(spec.name, spec.connected, size, parts, ok, stats, table)


def solve_catalog(name: str, g: Graph, layout: RootedLayout | None,
                  connected: bool = False, **kwargs) -> Solution:
    if name not in CATALOG:
        raise InputError(f"unknown problem {name!r}; choose from {sorted(CATALOG)}")
    return solve(g, layout, CATALOG[name].with_connected(connected), **kwargs)


def witness_labels(g: Graph, sol: Solution) -> list[str]:
    return [g.label(v) for v in sorted(sol.vertices)]
