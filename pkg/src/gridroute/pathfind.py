"""Exact shortest paths over the visibility graph and path post-processing.

Dijkstra runs with a lazy-deletion binary heap. Length ties are broken
deterministically: fewer waypoints first, then the lexicographically
smallest waypoint sequence, so equal inputs produce identical paths on
every platform. Consecutive collinear waypoints are merged in the reported
path; they are not genuine deflections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import NoPathError
from .geometry import Point, cross
from .visibility import VisibilityGraph


@dataclass(frozen=True)
class Path:
    """Ordered waypoints from source to destination with total length in meters."""

    waypoints: tuple[Point, ...]
    length_m: float

    @property
    def deflections(self) -> list[Point]:
        return list(self.waypoints[1:-1])

    def __post_init__(self):
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            if a == b:
                raise ValueError("consecutive waypoints must be distinct")


def merge_collinear(waypoints) -> list[Point]:
    """Drop interior waypoints where the heading does not change."""
    out: list[Point] = []
    for p in waypoints:
        while len(out) >= 2:
            a, b = out[-2], out[-1]
            forward = (b[0] - a[0]) * (p[0] - b[0]) + (b[1] - a[1]) * (p[1] - b[1])
            if cross(a, b, p) == 0 and forward > 0:
                out.pop()
            else:
                break
        out.append(p)
    return out


def _finish(waypoints: list[Point], cell_size_m: float) -> Path:
    merged = merge_collinear(waypoints)
    length = sum(math.hypot(b[0] - a[0], b[1] - a[1])
                 for a, b in zip(merged, merged[1:])) * cell_size_m
    return Path(tuple(merged), length)


def dijkstra_shortest_path(gv: VisibilityGraph, source: Point, dest: Point) -> Path:
    """Minimum-length path from source to destination in the visibility graph.

    Raises :class:`NoPathError` when the destination is unreachable. A query
    with source equal to destination returns a zero-length single-waypoint
    path.
    """
    if source not in gv.vertex_set:
        raise ValueError(f"source {source} is not a graph vertex")
    if dest not in gv.vertex_set:
        raise ValueError(f"destination {dest} is not a graph vertex")
    if source == dest:
        return Path((source,), 0.0)
    heap: list[tuple[float, int, tuple[Point, ...]]] = [(0.0, 1, (source,))]
    finalized: set[Point] = set()
    while heap:
        dist, hops, wp = heappop(heap)
        v = wp[-1]
        if v in finalized:
            continue
        finalized.add(v)
        if v == dest:
            return _finish(list(wp), gv.cell_size_m)
        for q, w in gv.neighbors(v):
            if q not in finalized:
                heappush(heap, (dist + w, hops + 1, wp + (q,)))
    raise NoPathError(f"no route from {source} to {dest}")


def path_length(segments) -> float:
    """Total length from squared segment lengths: the sum of their roots.

    Entries are positive integer squared lengths in cell units. Full
    precision is returned; round to two decimals for display.
    """
    total = 0.0
    for s in segments:
        if s <= 0 or int(s) != s:
            raise ValueError("entries must be positive integer squared lengths")
        total += math.sqrt(s)
    return total


def format_length(value: float) -> str:
    """Two-decimal display form used in path text output."""
    return f"{value:.2f}"


def deflection_points(path: Path) -> list[Point]:
    """Interior waypoints where the route changes heading, in order."""
    return path.deflections


def path_to_text(path: Path) -> str:
    """Serialize as one ``x y`` line per waypoint plus a ``length_m`` line."""
    lines = [f"{x} {y}" for x, y in path.waypoints]
    lines.append(f"length_m {format_length(path.length_m)}")
    return "\n".join(lines) + "\n"


def path_from_text(text: str) -> list[Point]:
    """Waypoints from path text; the trailing length line is ignored."""
    pts: list[Point] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("length_m"):
            continue
        xs, ys = line.split()
        pts.append((int(xs), int(ys)))
    if not pts:
        raise ValueError("path text contains no waypoints")
    return pts
