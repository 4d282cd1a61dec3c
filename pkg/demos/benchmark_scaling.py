"""Scaled-down timing sweep showing what drives planning cost.

The full suite (scenarios a, b, c) runs via ``gridroute bench``; this demo
uses smaller parameter points so it finishes in seconds. The pattern matches
the full runs: time tracks the obstacle count, not the grid size.
"""

from pathlib import Path

from gridroute.bench import BenchSpec, bench_csv, run_bench

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

fixed_obstacles = BenchSpec(scenario="b", seed=42, reps=3,
                            points=((10, 20), (20, 20), (40, 20), (80, 20)))
growing_obstacles = BenchSpec(scenario="c", seed=42, reps=3,
                              points=((40, 20), (40, 40), (40, 80), (40, 160)))

print("fixed 20 obstacles, growing grid:")
rows_b = run_bench(fixed_obstacles)
for r in rows_b:
    print(f"  g={r['g']:<3} -> {r['time_sec'] * 1000:7.1f} ms")

print("fixed 40x40 grid, growing obstacles:")
rows_c = run_bench(growing_obstacles)
for r in rows_c:
    print(f"  o={r['o']:<3} -> {r['time_sec'] * 1000:7.1f} ms")

csv_path = OUT / "benchmark_scaling.csv"
csv_path.write_text(bench_csv(rows_b + rows_c))
print(f"wrote {csv_path}")
