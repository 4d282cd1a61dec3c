"""SVG rendering of grids and planned routes.

Obstacles render as shaded squares, the route as a red polyline, endpoints
and deflection points as blue circles, and lattice corners as small dots.
The y axis is flipped so the grid origin sits bottom-left. Output is plain
SVG 1.1 text with integer coordinates, stable byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gridmap import OccupancyGrid
from .pathfind import Path


@dataclass(frozen=True)
class RenderStyle:
    cell_px: int = 32
    margin_px: int = 16
    obstacle_fill: str = "#8d8d8d"
    path_stroke: str = "#e53935"
    path_width: int = 3
    marker_fill: str = "#1e88e5"
    marker_radius: int = 5
    dot_fill: str = "#b0b0b0"
    dot_px: int = 2


def render_svg(grid: OccupancyGrid, path: Path, style: RenderStyle | None = None) -> str:
    """Render a grid and a route; one ``rect class="cell"`` per obstacle cell,
    one polyline for the route, circles at endpoints and deflections."""
    st = style or RenderStyle()
    for p in path.waypoints:
        if not grid.in_lattice(p):
            raise ValueError(f"waypoint {p} outside the grid")
    c, m = st.cell_px, st.margin_px
    width = 2 * m + grid.cols * c
    height = 2 * m + grid.rows * c

    def sx(x: int) -> int:
        return m + x * c

    def sy(y: int) -> int:
        return m + (grid.rows - y) * c

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    out.append(f'<rect width="{width}" height="{height}" fill="#ffffff"/>')
    for col, row in grid.occupied_cells():
        out.append(f'<rect class="cell" x="{sx(col)}" y="{sy(row + 1)}" '
                   f'width="{c}" height="{c}" fill="{st.obstacle_fill}"/>')
    half = st.dot_px // 2
    for y in range(grid.rows + 1):
        for x in range(grid.cols + 1):
            out.append(f'<rect class="dot" x="{sx(x) - half}" y="{sy(y) - half}" '
                       f'width="{st.dot_px}" height="{st.dot_px}" fill="{st.dot_fill}"/>')
    pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in path.waypoints)
    out.append(f'<polyline points="{pts}" fill="none" '
               f'stroke="{st.path_stroke}" stroke-width="{st.path_width}"/>')
    markers = [path.waypoints[0], path.waypoints[-1], *path.deflections] \
        if len(path.waypoints) > 1 else [path.waypoints[0]]
    for x, y in markers:
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{st.marker_radius}" '
                   f'fill="{st.marker_fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
