"""Solve the whole catalog on one random interval graph and compare with brute force."""

import numpy as np

from mimsolve import CATALOG, brute_max_induced, interval_layout, solve, validate_width
from mimsolve.generators import interval_graph, random_intervals


def main() -> None:
    rng = np.random.default_rng(3)
    intervals = random_intervals(12, rng, span=12, mean_length=2.5)
    g, layout = interval_graph(intervals), interval_layout(intervals)
    print(f"{g.n} vertices, {g.m} edges, layout width {validate_width(g, layout, 1).width}")
    for name in sorted(CATALOG):
        for connected in (False, True):
            sol = solve(g, layout, name, connected=connected)
            truth = brute_max_induced(name, g, connected).size
            flag = "connected" if connected else "any"
            print(f"  {name:11s} {flag:9s} size {sol.size:2d}  oracle {truth:2d}  "
                  f"states {sol.stats['max_states']}")


if __name__ == "__main__":
    main()
