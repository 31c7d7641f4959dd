"""Instance factories and an independent MILP cross-check shared by the tests."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from mimsolve.generators import (interval_graph, permutation_graph, random_cotree,
                                 random_intervals, random_permutation)
from mimsolve.graph import Graph, complement
from mimsolve.layout import (cograph_from_cotree, cotree_layout, interval_layout,
                             permutation_layout)

CATALOG_NAMES = ("cluster", "clique", "polar", "split", "p3bar-free", "k3bar-free")


def interval_instance(n: int, rng: np.random.Generator):
    iv = random_intervals(n, rng, span=max(2, n), mean_length=float(rng.uniform(0.5, 4)))
    return interval_graph(iv), interval_layout(iv)


def permutation_instance(n: int, rng: np.random.Generator):
    perm = random_permutation(n, rng)
    return permutation_graph(perm), permutation_layout(perm)


def cotree_instance(n: int, rng: np.random.Generator):
    tree = random_cotree(n, rng)
    return cograph_from_cotree(tree), cotree_layout(tree)


def width_one_instances(count: int, nmax: int, seed: int, nmin: int = 1):
    """Cycle through interval, permutation and cograph instances."""
    rng = np.random.default_rng(seed)
    makers = (interval_instance, permutation_instance, cotree_instance)
    for i in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        yield makers[i % 3](n, rng)


def _induced_p3s(g: Graph):
    for v in range(g.n):
        for u, w in combinations(g.neighbors(v), 2):
            if not g.has_edge(u, w):
                yield (u, v, w)


def milp_max_induced(problem: str, g: Graph) -> int:
    """Exact optimum by integer programming (HiGHS through scipy).

    One 0/1 variable per (vertex, part).  Cluster parts forbid every induced
    P3 of ``g``, co-cluster parts every induced P3 of the complement, and a
    clique forbids every non-edge.
    """
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import lil_matrix

    co = complement(g)
    if problem == "clique":
        parts = 1
        forbidden = [[(u, 0), (w, 0)] for u, w in co.edges()]
    else:
        graphs = {"cluster": [g], "polar": [g, co]}[problem]
        parts = len(graphs)
        forbidden = [[(x, i) for x in t] for i, h in enumerate(graphs) for t in _induced_p3s(h)]
    rows = len(forbidden) + g.n
    a = lil_matrix((rows, g.n * parts))
    upper = np.empty(rows)
    for r, group in enumerate(forbidden):
        for v, i in group:
            a[r, v * parts + i] = 1
        upper[r] = len(group) - 1
    for v in range(g.n):
        for i in range(parts):
            a[len(forbidden) + v, v * parts + i] = 1
        upper[len(forbidden) + v] = 1
    res = milp(-np.ones(g.n * parts), integrality=np.ones(g.n * parts), bounds=Bounds(0, 1),
               constraints=LinearConstraint(a.tocsr(), -np.inf, upper))
    if not res.success:
        raise RuntimeError(f"MILP failed: {res.message}")
    return int(round(-res.fun))
