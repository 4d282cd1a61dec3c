"""Plan a route across a hand-built map and render it to SVG.

Obstacles arrive as polygon outlines in meters. Each polygon is replaced by
its convex hull, the hull is rasterized onto the grid (any cell it overlaps
with positive area becomes a no-fly cell), and the planner routes corner to
corner around the result.
"""

from pathlib import Path

from gridroute import (OccupancyGrid, convex_hull, discretize_dimensions,
                       plan2d, rasterize_hull, render_svg, serialize_map)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# a 10 m x 20 m field at 1 m precision
rows, cols = discretize_dimensions(10.0, 20.0, 1.0)
grid = OccupancyGrid(rows, cols, cell_size_m=1.0)
print(f"grid: {rows} rows x {cols} cols")

buildings = [
    [(3.2, 1.1), (6.8, 1.4), (6.1, 4.9), (2.9, 4.2)],
    [(9.5, 5.5), (13.4, 6.2), (12.8, 9.0), (10.0, 8.8), (11.5, 7.0)],
    [(15.1, 0.8), (18.0, 1.0), (17.6, 3.9), (15.4, 3.5)],
]
for outline in buildings:
    hull = convex_hull(outline)
    cells = rasterize_hull(hull, grid)
    print(f"polygon with {len(outline)} points -> hull with {len(hull)} "
          f"vertices -> {len(cells)} no-fly cells")

source, dest = (0, 0), (cols, rows)
path = plan2d(grid, source, dest)
print(f"route {source} -> {dest}: length {path.length_m:.2f} m, "
      f"{len(path.deflections)} deflection points: {path.deflections}")

(OUT / "plan_basic.map").write_text(serialize_map(grid, source, dest))
(OUT / "plan_basic.svg").write_text(render_svg(grid, path))
print(f"wrote {OUT / 'plan_basic.svg'}")
