"""Turn a vertex cover instance into width-2 instances for each preset."""

from mimsolve import PRESETS, build_reduction, certify_reduction
from mimsolve.generators import cycle_graph
from mimsolve.oracles import brute_vertex_cover


def main() -> None:
    h = cycle_graph(7)
    cover = next(k for k in range(h.n + 1) if brute_vertex_cover(h, k))
    print(f"C7 has minimum vertex cover {cover}")
    for name in sorted(PRESETS):
        red = build_reduction(h, name)
        report = certify_reduction(red)
        print(f"  {name:7s} {red.graph.n:4d} vertices {red.graph.m:6d} edges  "
              f"width {report.width}  deletion threshold for k={cover}: {red.threshold(cover)}")


if __name__ == "__main__":
    main()
