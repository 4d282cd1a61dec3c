"""Cross-check the rotational sweep against ground-truth visibility.

Every edge the sweep admits, and every edge it rejects, is recomputed with
the brute-force predicate (scan every occupied cell plus every blocking
edge). The two constructions must agree exactly; this is the same check the
test suite runs at scale.
"""

import time

from gridroute import (brute_force_visible, build_obstacle_graph,
                       build_visibility_graph, gen_random_map)

for seed in range(5):
    grid = gen_random_map(15, 15, 60 + 10 * seed, seed)
    source, dest = (0, 0), (15, 15)
    t0 = time.perf_counter()
    gv = build_visibility_graph(build_obstacle_graph(grid), source, dest)
    sweep_ms = (time.perf_counter() - t0) * 1000
    t0 = time.perf_counter()
    oracle = {(u, v)
              for i, u in enumerate(gv.vertices) for v in gv.vertices[i + 1:]
              if brute_force_visible(u, v, grid)}
    brute_ms = (time.perf_counter() - t0) * 1000
    verdict = "MATCH" if oracle == gv.edge_set() else "MISMATCH"
    print(f"seed {seed}: {len(gv.vertices)} vertices, {len(gv.edges)} edges, "
          f"sweep {sweep_ms:.0f} ms vs brute force {brute_ms:.0f} ms -> {verdict}")
