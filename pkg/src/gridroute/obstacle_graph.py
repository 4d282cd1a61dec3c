"""Obstacle graph: corner vertices and unit bounding edges of occupied cells.

Vertices are the lattice corners touched by at least one occupied cell; a
vertex shared by all four surrounding cells is interior to a larger obstacle,
is marked, and never participates in visibility. Edges are the unit bounding
edges of occupied cells; an edge shared by two occupied cells is a blocking
edge: it obstructs collinear lines of sight and may not be flown along.

Per-column and per-row sorted indexes of blocking edges are built eagerly so
axis-aligned visibility queries are logarithmic, and flat coordinate arrays
are kept for the rotational sweep.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .geometry import Point
from .gridmap import OccupancyGrid


class ObstacleVertex(NamedTuple):
    pos: Point
    incident_obstacle_cells: int
    marked_interior: bool


class ObstacleEdge(NamedTuple):
    a: Point
    b: Point
    shared_obstacle_cells: int

    @property
    def blocking(self) -> bool:
        return self.shared_obstacle_cells == 2


class CornerRole(NamedTuple):
    is_left_bottom_corner: bool
    is_left_top_corner: bool


class ObstacleGraph:
    """Corner-vertex graph of a grid's occupied cells.

    Deterministic ordering: vertices row-major by (y, x); edges are all
    horizontal edges row-major, then all vertical edges row-major.
    Immutable once built.
    """

    def __init__(self, grid: OccupancyGrid):
        self.grid = grid
        occ = grid.occupied
        rows, cols = grid.rows, grid.cols

        counts = np.zeros((rows + 1, cols + 1), dtype=np.int8)
        counts[:-1, :-1] += occ
        counts[:-1, 1:] += occ
        counts[1:, :-1] += occ
        counts[1:, 1:] += occ
        vidx = np.argwhere(counts >= 1)
        self._counts = counts
        self.vertices: list[Point] = [(int(x), int(y)) for y, x in vidx]
        self._vertex_count = {p: int(counts[p[1], p[0]]) for p in self.vertices}
        self.marked: frozenset[Point] = frozenset(
            p for p, c in self._vertex_count.items() if c == 4)

        # horizontal edge (x,y)-(x+1,y) at index [y, x]; vertical edge
        # (x,y)-(x,y+1) at index [y, x]
        hshared = np.zeros((rows + 1, cols), dtype=np.int8)
        hshared[:-1, :] += occ
        hshared[1:, :] += occ
        vshared = np.zeros((rows, cols + 1), dtype=np.int8)
        vshared[:, :-1] += occ
        vshared[:, 1:] += occ

        edges: list[ObstacleEdge] = []
        for y, x in np.argwhere(hshared >= 1):
            edges.append(ObstacleEdge((int(x), int(y)), (int(x) + 1, int(y)),
                                      int(hshared[y, x])))
        for y, x in np.argwhere(vshared >= 1):
            edges.append(ObstacleEdge((int(x), int(y)), (int(x), int(y) + 1),
                                      int(vshared[y, x])))
        self.edges = edges

        self.adjacency: dict[Point, list[int]] = {p: [] for p in self.vertices}
        for i, e in enumerate(edges):
            self.adjacency[e.a].append(i)
            self.adjacency[e.b].append(i)

        self.col_blocking: dict[int, list[int]] = {}
        for y, x in np.argwhere(vshared == 2):
            self.col_blocking.setdefault(int(x), []).append(int(y))
        self.row_blocking: dict[int, list[int]] = {}
        for y, x in np.argwhere(hshared == 2):
            self.row_blocking.setdefault(int(y), []).append(int(x))
        for v in self.col_blocking.values():
            v.sort()
        for v in self.row_blocking.values():
            v.sort()

        # flat arrays for the sweep
        if self.vertices:
            va = np.array(self.vertices, dtype=np.int64)
            self._vx, self._vy = va[:, 0].copy(), va[:, 1].copy()
        else:
            self._vx = self._vy = np.empty(0, dtype=np.int64)
        if edges:
            ea = np.array([(e.a[0], e.a[1], e.b[0], e.b[1]) for e in edges],
                          dtype=np.int64)
            self._eax, self._eay = ea[:, 0].copy(), ea[:, 1].copy()
            self._ebx, self._eby = ea[:, 2].copy(), ea[:, 3].copy()
        else:
            self._eax = self._eay = self._ebx = self._eby = np.empty(0, dtype=np.int64)

    def vertex(self, pos: Point) -> ObstacleVertex | None:
        c = self._vertex_count.get(pos)
        if c is None:
            return None
        return ObstacleVertex(pos, c, c == 4)

    def unmarked_vertices(self) -> list[Point]:
        return [p for p in self.vertices if self._vertex_count[p] < 4]

    def corner_role(self, pos: Point) -> CornerRole:
        """Whether ``pos`` is the left-bottom / left-top corner of an occupied cell."""
        x, y = pos
        return CornerRole(self.grid.is_occupied(x, y), self.grid.is_occupied(x, y - 1))

    def dump(self) -> str:
        """Debug text dump, one vertex or edge per line (not a stable format)."""
        out = []
        for p in self.vertices:
            c = self._vertex_count[p]
            out.append(f"V {p[0]} {p[1]} {c} {1 if c == 4 else 0}")
        for e in self.edges:
            out.append(f"E {e.a[0]} {e.a[1]} {e.b[0]} {e.b[1]} "
                       f"{e.shared_obstacle_cells} {1 if e.blocking else 0}")
        return "\n".join(out) + "\n"


def build_obstacle_graph(grid: OccupancyGrid) -> ObstacleGraph:
    return ObstacleGraph(grid)


def marked_vertices(graph: ObstacleGraph) -> set[Point]:
    """Vertices shared by four occupied cells; excluded from visibility."""
    return set(graph.marked)


def blocking_edges(graph: ObstacleGraph) -> set[ObstacleEdge]:
    """Edges shared by two occupied cells, found in one pass over the edges."""
    return {e for e in graph.edges if e.shared_obstacle_cells == 2}
