"""Canonical representatives of partial solutions at a cut.

A representative is a tuple of at most three vertices taken from a vertex
set S under a chain order:

* cluster: (head of C1, tail of C1, head of C2), where C1, C2 are the first
  two components of S listed by decreasing head;
* co-cluster: the cluster representative in the complement graph under the
  reversed order;
* connectivity: (head of the first component, head of the last component);
* independence: (head,), the largest vertex of an independent set.

Absent entries are ``None``.  All functions take the order as a sequence
listing vertices from smallest to largest.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from enum import Enum
from typing import NamedTuple

from .errors import ContractError
from .graph import (Graph, bits, complement, components_mask, is_cluster_mask,
                    is_independent_mask, to_mask)


class RepKind(str, Enum):
    CLUSTER = "cluster"
    COCLUSTER = "cocluster"
    CONNECTIVITY = "connectivity"
    INDEPENDENT = "independent"
    COINDEPENDENT = "coindependent"

    @property
    def flipped(self) -> bool:
        """Whether the kind works in the complement graph under the reversed order."""
        return self in (RepKind.COCLUSTER, RepKind.COINDEPENDENT)

    @property
    def slots(self) -> int:
        return {RepKind.CLUSTER: 3, RepKind.COCLUSTER: 3, RepKind.CONNECTIVITY: 2}.get(self, 1)


class ClusterRep(NamedTuple):
    h1: int | None = None
    t1: int | None = None
    h2: int | None = None


class CoClusterRep(NamedTuple):
    h1: int | None = None
    t1: int | None = None
    h2: int | None = None


class ConnectivityRep(NamedTuple):
    first: int | None = None
    last: int | None = None


class IndependenceRep(NamedTuple):
    head: int | None = None


_EMPTY = {RepKind.CLUSTER: (None, None, None), RepKind.COCLUSTER: (None, None, None),
          RepKind.CONNECTIVITY: (None, None), RepKind.INDEPENDENT: (None,),
          RepKind.COINDEPENDENT: (None,)}
_TYPES = {RepKind.CLUSTER: ClusterRep, RepKind.COCLUSTER: CoClusterRep,
          RepKind.CONNECTIVITY: ConnectivityRep, RepKind.INDEPENDENT: IndependenceRep,
          RepKind.COINDEPENDENT: IndependenceRep}


def empty_rep(kind: RepKind) -> tuple:
    return _EMPTY[kind]


def rep_vertices(rep: Iterable[int | None]) -> frozenset[int]:
    return frozenset(v for v in rep if v is not None)


# Raw helpers on adjacency rows.  ``key`` maps a vertex to a number that
# grows along the governing order (already negated for reversed orders).

def cluster_rep_raw(adj: Sequence[int], key, mask: int) -> tuple:
    if not mask:
        return (None, None, None)
    vs = sorted(bits(mask), key=key, reverse=True)
    h1 = vs[0]
    comp = next(c for c in components_mask(adj, mask) if c >> h1 & 1)
    t1, h2 = h1, None
    for v in vs[1:]:
        if comp >> v & 1:
            t1 = v
        elif h2 is None:
            h2 = v
    return (h1, t1, h2)


def connectivity_rep_raw(adj: Sequence[int], key, mask: int) -> tuple:
    if not mask:
        return (None, None)
    heads = [max(bits(c), key=key) for c in components_mask(adj, mask)]
    return (max(heads, key=key), min(heads, key=key))


def independence_rep_raw(key, mask: int) -> tuple:
    return (max(bits(mask), key=key),) if mask else (None,)


def _orientation(g: Graph, kind: RepKind, order: Sequence[int]):
    rank = {v: i for i, v in enumerate(order)}
    if kind.flipped:
        return complement(g).adj, (lambda v: -rank[v]), rank
    return g.adj, rank.__getitem__, rank


def _covered(mask: int, rank: dict[int, int]) -> None:
    missing = [v for v in bits(mask) if v not in rank]
    if missing:
        raise ContractError(f"order does not cover vertices {missing}")


def rep_of(kind: RepKind, g: Graph, s: Iterable[int], order: Sequence[int]) -> tuple:
    """Representative of ``s`` for the given kind; checks the kind's property."""
    kind = RepKind(kind)
    mask = to_mask(s, g.n)
    adj, key, rank = _orientation(g, kind, order)
    _covered(mask, rank)
    if kind in (RepKind.CLUSTER, RepKind.COCLUSTER):
        if not is_cluster_mask(adj, mask):
            raise ContractError(f"set is not a {kind.value} set")
        return _TYPES[kind](*cluster_rep_raw(adj, key, mask))
    if kind is RepKind.CONNECTIVITY:
        return ConnectivityRep(*connectivity_rep_raw(adj, key, mask))
    if not is_independent_mask(adj, mask):
        raise ContractError(f"set is not {'a clique' if kind.flipped else 'independent'}")
    return IndependenceRep(*independence_rep_raw(key, mask))


def cluster_rep(g: Graph, s: Iterable[int], order: Sequence[int]) -> ClusterRep:
    return rep_of(RepKind.CLUSTER, g, s, order)


def cocluster_rep(g: Graph, s: Iterable[int], order: Sequence[int]) -> CoClusterRep:
    return CoClusterRep(*cluster_rep(complement(g), s, list(reversed(order))))


def connectivity_rep(g: Graph, s: Iterable[int], order: Sequence[int]) -> ConnectivityRep:
    return rep_of(RepKind.CONNECTIVITY, g, s, order)


def independence_rep(g: Graph, s: Iterable[int], order: Sequence[int]) -> IndependenceRep:
    return rep_of(RepKind.INDEPENDENT, g, s, order)


def property_holds(kind: RepKind, g: Graph, s: Iterable[int]) -> bool:
    kind = RepKind(kind)
    mask = to_mask(s, g.n)
    adj = complement(g).adj if kind.flipped else g.adj
    if kind in (RepKind.CLUSTER, RepKind.COCLUSTER):
        return is_cluster_mask(adj, mask)
    if kind is RepKind.CONNECTIVITY:
        return True
    return is_independent_mask(adj, mask)


def rep_union(g: Graph, r1: Iterable[int | None], r2: Iterable[int | None],
              order: Sequence[int], kind: RepKind) -> tuple | None:
    """Representative of the union of two representatives' vertex sets.

    Returns ``None`` when that union violates the kind's property.
    """
    kind = RepKind(kind)
    union = rep_vertices(r1) | rep_vertices(r2)
    if not property_holds(kind, g, union):
        return None
    return rep_of(kind, g, union, order)


def enumerate_reps(node_vertices: Iterable[int], order: Sequence[int], kind: RepKind,
                   g: Graph) -> list[tuple]:
    """Every fixed-point representative over ``node_vertices``.

    Candidates are built slot by slot in descending order and kept when the
    representative of their own vertex set is the candidate itself.
    """
    kind = RepKind(kind)
    mask = to_mask(node_vertices, g.n)
    adj, key, rank = _orientation(g, kind, order)
    _covered(mask, rank)
    vs = sorted(bits(mask), key=key, reverse=True)
    typ = _TYPES[kind]
    out = [typ(*_EMPTY[kind])]
    if kind in (RepKind.INDEPENDENT, RepKind.COINDEPENDENT):
        return out + [typ(v) for v in vs]
    if kind is RepKind.CONNECTIVITY:
        for i, x in enumerate(vs):
            out.append(typ(x, x))
            out.extend(typ(x, y) for y in vs[i + 1:] if not adj[x] >> y & 1)
        return out
    for i, h1 in enumerate(vs):
        tails = [h1] + [t for t in vs[i + 1:] if adj[h1] >> t & 1]
        for t1 in tails:
            out.append(typ(h1, t1, None))
            for h2 in vs[i + 1:]:
                if h2 == t1 or adj[h1] >> h2 & 1 or adj[t1] >> h2 & 1:
                    continue
                cand = (h1, t1, h2)
                m = (1 << h1) | (1 << t1) | (1 << h2)
                if cluster_rep_raw(adj, key, m) == cand:
                    out.append(typ(*cand))
    return out
