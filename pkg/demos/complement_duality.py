"""A width-1 layout of g is also one of its complement, so one layout serves both."""

import numpy as np

from mimsolve import complement, permutation_layout, solve, validate_width
from mimsolve.generators import permutation_graph, random_permutation


def main() -> None:
    rng = np.random.default_rng(11)
    perm = random_permutation(40, rng)
    g, layout = permutation_graph(perm), permutation_layout(perm)
    co = complement(g)
    print("width on g:", validate_width(g, layout, 1).width)
    print("width on complement:", validate_width(co, layout, 1).width)
    a = solve(g, layout, "p3bar-free").size
    b = solve(co, layout, "cluster").size
    print(f"largest P3-complement-free set in g: {a}; largest cluster in complement: {b}")


if __name__ == "__main__":
    main()
