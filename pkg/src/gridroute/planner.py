"""End-to-end planning: the 2D pipeline, multi-stop journeys and the 3D
plane heuristics.

``plan2d`` composes obstacle-graph construction, visibility-graph assembly
and Dijkstra. Long journeys are split at caller-chosen stops; each leg is
planned on the map perceived at the leg's start, so the legs are
individually optimal while the stop choice stays external. Between
altitudes, ``choose_layer`` picks the layer with the fewest obstacle cells.
True 3D shortest paths are out of scope; instead ``plan_rotated_planes``
slices the voxel world with a fan of planes through the source-destination
line, plans within each slice and keeps the shortest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from .errors import InvalidEndpointError, MapParseError, NoPathError
from .geometry import Point
from .gridmap import OccupancyGrid
from .obstacle_graph import build_obstacle_graph
from .pathfind import Path, dijkstra_shortest_path
from .visibility import build_visibility_graph

Point3 = tuple[float, float, float]


@dataclass(frozen=True)
class PlanConfig:
    """Planning knobs: grid precision, case-3 strictness, journey stops and
    the plane fan used for 3D planning."""

    precision_m: float = 1.0
    strict_case3: bool = False
    stop_list: tuple[Point, ...] = ()
    plane_count: int = 7
    plane_angle_step_deg: float = 15.0

    def __post_init__(self):
        if not (self.precision_m > 0):
            raise ValueError("precision must be positive")
        if self.plane_count < 1:
            raise ValueError("plane count must be at least 1")
        if not (self.plane_angle_step_deg > 0):
            raise ValueError("plane angle step must be positive")


def plan2d(grid: OccupancyGrid, source: Point, dest: Point,
           config: PlanConfig | None = None, *, per_pair: bool = False,
           parallel: bool = False) -> Path:
    """Shortest obstacle-free route on one grid.

    Pipeline: obstacle graph, then visibility graph, then Dijkstra.
    Deterministic for equal inputs. Source equal to destination yields a
    zero-length single-waypoint path.
    """
    config = config or PlanConfig()
    if source == dest:
        if not grid.in_lattice(source):
            raise InvalidEndpointError(f"endpoint {source} outside the corner lattice")
        return Path((source,), 0.0)
    gobs = build_obstacle_graph(grid)
    gv = build_visibility_graph(gobs, source, dest,
                                strict_case3=config.strict_case3,
                                per_pair=per_pair, parallel=parallel)
    return dijkstra_shortest_path(gv, source, dest)


class MapProvider(Protocol):
    """Source of the occupancy grid perceived at a given position."""

    def grid_at(self, position: Point) -> OccupancyGrid: ...


class StaticMapProvider:
    """Provider that always perceives the same grid."""

    def __init__(self, grid: OccupancyGrid):
        self._grid = grid

    def grid_at(self, position: Point) -> OccupancyGrid:
        return self._grid


def plan_with_stops(provider: MapProvider, source: Point, dest: Point,
                    stops=None, config: PlanConfig | None = None) -> Path:
    """Plan a journey through intermediate stops, re-perceiving at each stop.

    Legs are planned one by one on the grid the provider yields at the leg's
    start and concatenated with duplicate junctions merged. A failing leg
    raises :class:`NoPathError` carrying the leg index.
    """
    config = config or PlanConfig()
    stops = tuple(stops) if stops is not None else tuple(config.stop_list)
    for s in stops:
        if s == source or s == dest:
            raise ValueError("stops must be distinct from source and destination")
    points = [source, *stops, dest]
    waypoints: list[Point] = [source]
    total = 0.0
    for k in range(len(points) - 1):
        grid = provider.grid_at(points[k])
        try:
            leg = plan2d(grid, points[k], points[k + 1], config)
        except NoPathError as exc:
            raise NoPathError(f"leg {k} ({points[k]} to {points[k + 1]}): {exc}",
                              leg=k) from exc
        waypoints.extend(leg.waypoints[1:])
        total += leg.length_m
    if len(waypoints) == 1:
        return Path((source,), 0.0)
    return Path(tuple(waypoints), total)


def choose_layer(layers: list[OccupancyGrid]) -> int:
    """Index of the altitude layer with the fewest obstacle cells.

    Ties go to the lowest altitude, which costs the least battery to reach.
    """
    if not layers:
        raise ValueError("need at least one layer")
    dims = (layers[0].rows, layers[0].cols)
    for g in layers[1:]:
        if (g.rows, g.cols) != dims:
            raise ValueError("layers must share dimensions")
    counts = [g.occupied_count() for g in layers]
    return counts.index(min(counts))


class VoxelWorld:
    """3D boolean obstacle field of ``nx x ny x nz`` voxels, indexed [x, y, z]."""

    __slots__ = ("nx", "ny", "nz", "voxel_size_m", "occupied")

    def __init__(self, nx: int, ny: int, nz: int, voxel_size_m: float = 1.0,
                 occupied: np.ndarray | None = None):
        if min(nx, ny, nz) < 1:
            raise ValueError("voxel dimensions must be at least 1")
        if not (voxel_size_m > 0):
            raise ValueError("voxel size must be positive")
        self.nx, self.ny, self.nz = int(nx), int(ny), int(nz)
        self.voxel_size_m = float(voxel_size_m)
        if occupied is None:
            self.occupied = np.zeros((self.nx, self.ny, self.nz), dtype=bool)
        else:
            arr = np.array(occupied, dtype=bool, copy=True)
            if arr.shape != (self.nx, self.ny, self.nz):
                raise ValueError("occupancy array shape does not match dimensions")
            self.occupied = arr

    def __eq__(self, other) -> bool:
        if not isinstance(other, VoxelWorld):
            return NotImplemented
        return ((self.nx, self.ny, self.nz, self.voxel_size_m)
                == (other.nx, other.ny, other.nz, other.voxel_size_m)
                and bool(np.array_equal(self.occupied, other.occupied)))


def parse_voxels(text: str) -> VoxelWorld:
    """Parse the voxel file format: an ``nx ny nz voxel_size`` header, then
    nz blocks of ny rows of nx characters (z ascending, first row of each
    block is y = ny - 1), blocks separated by one blank line."""
    lines = text.splitlines()
    if not lines:
        raise MapParseError("empty voxel file", 1)
    head = lines[0].split()
    if len(head) != 4:
        raise MapParseError("header must be '<nx> <ny> <nz> <voxel_size_m>'", 1)
    try:
        nx, ny, nz, size = int(head[0]), int(head[1]), int(head[2]), float(head[3])
    except ValueError:
        raise MapParseError("malformed header numbers", 1) from None
    try:
        world = VoxelWorld(nx, ny, nz, size)
    except ValueError as exc:
        raise MapParseError(str(exc), 1) from None
    ln = 1
    for z in range(nz):
        if z > 0:
            if ln >= len(lines) or lines[ln].strip():
                raise MapParseError("expected blank line between blocks", ln + 1)
            ln += 1
        for i in range(ny):
            if ln >= len(lines):
                raise MapParseError(f"expected {ny} rows in block {z}", ln + 1)
            row = lines[ln]
            if len(row) != nx:
                raise MapParseError(f"expected {nx} characters, got {len(row)}", ln + 1)
            y = ny - 1 - i
            for x, ch in enumerate(row):
                if ch == "#":
                    world.occupied[x, y, z] = True
                elif ch != ".":
                    raise MapParseError(f"unknown character {ch!r}", ln + 1)
            ln += 1
    return world


def serialize_voxels(world: VoxelWorld) -> str:
    """Canonical text form of a voxel world; inverse of :func:`parse_voxels`."""
    out = [f"{world.nx} {world.ny} {world.nz} {world.voxel_size_m!r}"]
    for z in range(world.nz):
        if z > 0:
            out.append("")
        for y in range(world.ny - 1, -1, -1):
            out.append("".join("#" if world.occupied[x, y, z] else "."
                               for x in range(world.nx)))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class PlaneSlice:
    """One candidate plane through the source-destination line, rasterized to
    a planar occupancy grid. ``source``/``dest`` are in-plane lattice points;
    ``to_world`` maps in-plane lattice coordinates back to voxel-space."""

    theta_deg: float
    grid: OccupancyGrid
    source: Point
    dest: Point
    origin: Point3 = field(repr=False)
    axis_u: Point3 = field(repr=False)
    axis_w: Point3 = field(repr=False)
    cell: float = field(repr=False)
    offset: tuple[int, int] = field(repr=False)

    def to_world(self, x: float, y: float) -> Point3:
        ox, oy = self.offset
        sx = (x + ox) * self.cell
        sy = (y + oy) * self.cell
        return tuple(self.origin[i] + sx * self.axis_u[i] + sy * self.axis_w[i]
                     for i in range(3))


def _quad_hits_voxel_interior(quad: np.ndarray, axes: list[np.ndarray],
                              voxel: tuple[int, int, int]) -> bool:
    # Separating-axis test between the (closed) planar cell quad and the open
    # unit cube: interiors meet iff projections overlap strictly on every axis.
    v = np.array(voxel, dtype=np.float64)
    for a in axes:
        proj = quad @ a
        qlo, qhi = proj.min(), proj.max()
        blo = float(np.minimum(a, 0.0) @ np.ones(3) + v @ a)
        bhi = float(np.maximum(a, 0.0) @ np.ones(3) + v @ a)
        if not (qhi > blo and qlo < bhi):
            return False
    return True


def rotated_plane_slice(world: VoxelWorld, s3: Point3, d3: Point3,
                        theta_deg: float) -> PlaneSlice:
    """Rasterize one plane containing the source-destination line.

    The plane is the vertical reference plane through the line, rotated by
    ``theta_deg`` about the line. A planar cell is occupied when its square
    touches any occupied voxel's interior (conservative), or when it leaves
    the modeled world box (unmapped space is no-fly). Both endpoints land on
    in-plane lattice corners.
    """
    s = np.array(s3, dtype=np.float64)
    d = np.array(d3, dtype=np.float64)
    delta = d - s
    length = float(np.linalg.norm(delta))
    if length == 0.0:
        raise ValueError("source and destination coincide")
    u = delta / length
    zref = np.array([0.0, 0.0, 1.0])
    w0 = zref - np.dot(zref, u) * u
    if np.linalg.norm(w0) < 1e-12:
        xref = np.array([1.0, 0.0, 0.0])
        w0 = xref - np.dot(xref, u) * u
    w0 /= np.linalg.norm(w0)
    th = math.radians(theta_deg)
    w = w0 * math.cos(th) + np.cross(u, w0) * math.sin(th)

    cols_line = max(1, math.ceil(length - 1e-9))
    h = length / cols_line  # in-plane cell edge, in voxel units

    box = np.array([(x, y, z)
                    for x in (0, world.nx) for y in (0, world.ny) for z in (0, world.nz)],
                   dtype=np.float64)
    px = (box - s) @ u / h
    py = (box - s) @ w / h
    ix0, ix1 = math.floor(px.min()), math.ceil(px.max())
    iy0, iy1 = math.floor(py.min()), math.ceil(py.max())
    cols = ix1 - ix0
    rows = iy1 - iy0
    source2: Point = (-ix0, -iy0)
    dest2: Point = (-ix0 + cols_line, -iy0)

    # voxels close enough to the plane to possibly touch a cell
    occ_idx = np.argwhere(world.occupied)
    if occ_idx.size:
        centers = occ_idx + 0.5
        normal = np.cross(u, w)
        dist = np.abs((centers - s) @ normal)
        near = occ_idx[dist < math.sqrt(3.0) / 2.0 + 1e-9]
    else:
        near = occ_idx
    voxels = [tuple(int(c) for c in v) for v in near]

    axes = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]),
            np.array([0.0, 0.0, 1.0]), np.cross(u, w)]
    for e in (u, w):
        for b in (np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]),
                  np.array([0.0, 0.0, 1.0])):
            a = np.cross(e, b)
            if np.linalg.norm(a) > 1e-12:
                axes.append(a)

    occ = np.zeros((rows, cols), dtype=bool)
    hi_box = np.array([world.nx, world.ny, world.nz], dtype=np.float64)
    for j in range(rows):
        for i in range(cols):
            xlo, ylo = (i + ix0) * h, (j + iy0) * h
            quad = np.array([s + xlo * u + ylo * w,
                             s + (xlo + h) * u + ylo * w,
                             s + (xlo + h) * u + (ylo + h) * w,
                             s + xlo * u + (ylo + h) * w])
            if (quad < -1e-9).any() or (quad > hi_box + 1e-9).any():
                occ[j, i] = True
                continue
            for vox in voxels:
                if _quad_hits_voxel_interior(quad, axes, vox):
                    occ[j, i] = True
                    break
    grid = OccupancyGrid(rows, cols, cell_size_m=h * world.voxel_size_m, occupied=occ)
    return PlaneSlice(theta_deg, grid, source2, dest2,
                      origin=tuple(s), axis_u=tuple(u), axis_w=tuple(w),
                      cell=h, offset=(ix0, iy0))


def plane_angles(config: PlanConfig) -> list[float]:
    """Candidate plane angles: 0, then alternating +/- multiples of the step."""
    angles = [0.0]
    i = 1
    while len(angles) < config.plane_count:
        angles.append(i * config.plane_angle_step_deg)
        if len(angles) < config.plane_count:
            angles.append(-i * config.plane_angle_step_deg)
        i += 1
    if max(abs(a) for a in angles) > 90.0 + 1e-9:
        raise ValueError("plane fan must stay within +/-90 degrees")
    return angles


def plan_rotated_planes(world: VoxelWorld, s3: Point3, d3: Point3,
                        config: PlanConfig | None = None) -> tuple[Path, float]:
    """Plan within each candidate plane and keep the shortest result.

    Returns the winning in-plane path and its angle. Ties prefer the smaller
    angle magnitude, then the positive sign (the candidate generated first).
    Raises :class:`NoPathError` when no plane admits a route.
    """
    config = config or PlanConfig()
    if tuple(s3) == tuple(d3):
        raise ValueError("source and destination coincide")
    best: tuple[Path, float] | None = None
    for theta in plane_angles(config):
        try:
            sl = rotated_plane_slice(world, s3, d3, theta)
            path = plan2d(sl.grid, sl.source, sl.dest, config)
        except (NoPathError, InvalidEndpointError):
            continue
        if best is None or path.length_m < best[0].length_m:
            best = (path, theta)
    if best is None:
        raise NoPathError("no candidate plane admits a route")
    return best
