"""Graph families: interval, permutation and cographs plus a few named graphs."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from .graph import Graph
from .layout import CotreeNode


def interval_graph(intervals: Sequence[tuple]) -> Graph:
    """Intersection graph of open intervals.

    Two intervals are adjacent when they overlap in more than a point, so
    ``[0,2]`` and ``[2,4]`` are not adjacent.
    """
    iv = [(Fraction(a), Fraction(b)) for a, b in intervals]
    n = len(iv)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if iv[u][0] < iv[v][1] and iv[v][0] < iv[u][1]]
    return Graph(n, edges)


def random_intervals(n: int, rng: np.random.Generator, span: float | None = None,
                     mean_length: float = 3.0) -> list[tuple[int, int]]:
    """Random integer intervals with exponential lengths on ``[0, span)``."""
    span = n if span is None else span
    lefts = rng.integers(0, max(1, int(span)), size=n)
    lengths = 1 + rng.exponential(mean_length, size=n).astype(int)
    return [(int(a), int(a + b)) for a, b in zip(lefts, lengths)]


def permutation_graph(perm: Sequence[int]) -> Graph:
    """Vertices ``u < v`` are adjacent iff ``perm[u] > perm[v]``."""
    n = len(perm)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if perm[u] > perm[v]]
    return Graph(n, edges)


def random_permutation(n: int, rng: np.random.Generator) -> list[int]:
    return [int(x) for x in rng.permutation(n)]


def random_cotree(n: int, rng: np.random.Generator) -> CotreeNode:
    """Random binary cotree over vertices ``0..n-1`` with alternating labels."""
    nodes = [CotreeNode("v", [], vertex=v) for v in range(n)]
    while len(nodes) > 1:
        i, j = sorted(rng.choice(len(nodes), size=2, replace=False))
        b = nodes.pop(j)
        a = nodes.pop(i)
        label = "U" if rng.random() < 0.5 else "J"
        nodes.append(CotreeNode(label, [a, b]))
    return nodes[0]


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    draws = rng.random((n, n))
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if draws[u, v] < p])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
