"""Intervisibility between lattice vertices and visibility-graph assembly.

For a pivot vertex and a candidate target in its closed right half-plane,
exactly one of four mutually exclusive cases applies:

* same column: blocked only by a vertical blocking edge overlapping the
  joining segment (queried on the per-column index);
* same row: the mirrored query on the per-row index;
* exact 45-degree diagonal: blocked only when the segment runs through a
  lattice point that is the penetrated corner of an occupied cell
  (left-bottom corner for ascending lines, left-top for descending);
* generic position: answered by a clockwise rotational sweep around the
  pivot that probes points in decreasing slope order while maintaining a
  critical-edge list, so only a small subset of obstacle edges is ever
  tested against a line of sight.

:func:`brute_force_visible` is the independent ground truth: a segment is
visible iff it crosses no occupied cell's open interior and shares no
positive-length overlap with a blocking edge. The sweep is validated against
it pair by pair in the test suite.

Endpoint grazing never blocks: drones are small relative to obstacles and
may pass through corner contacts between separate obstacles.
"""

from __future__ import annotations

from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import InvalidEndpointError
from .geometry import Point, SlopeKey, euclid_distance, segments_properly_intersect
from .gridmap import OccupancyGrid
from .obstacle_graph import ObstacleGraph

# Float slope keys (dy/dx in double precision) order identically to exact
# rational comparison while both deltas stay below 2**20: distinct reduced
# rationals p1/q1 != p2/q2 differ by at least 1/(q1*q2), which exceeds the
# float spacing at every representable magnitude in that range. Grids are
# bounds-checked against this limit when the graph is built.
_COORD_LIMIT = 1 << 20


def classify_pair(pivot: Point, target: Point) -> str:
    """Case for a pivot/target pair: vertical, horizontal, diagonal45 or generic.

    The target must lie in the closed right half-plane of the pivot.
    """
    dx = target[0] - pivot[0]
    dy = target[1] - pivot[1]
    if dx == 0 and dy == 0:
        raise ValueError("pivot and target coincide")
    if dx < 0:
        raise ValueError("target must lie in the closed right half-plane")
    if dx == 0:
        return "vertical"
    if dy == 0:
        return "horizontal"
    if dx == abs(dy):
        return "diagonal45"
    return "generic"


def visible_vertical(pivot: Point, target: Point, graph: ObstacleGraph) -> bool:
    """Same-column visibility: no vertical blocking edge may overlap the segment."""
    x = pivot[0]
    ylo, yhi = sorted((pivot[1], target[1]))
    ks = graph.col_blocking.get(x)
    if not ks:
        return True
    i = bisect_left(ks, ylo)
    return not (i < len(ks) and ks[i] <= yhi - 1)


def visible_horizontal(pivot: Point, target: Point, graph: ObstacleGraph) -> bool:
    """Same-row visibility: no horizontal blocking edge may overlap the segment."""
    y = pivot[1]
    xlo, xhi = sorted((pivot[0], target[0]))
    ks = graph.row_blocking.get(y)
    if not ks:
        return True
    i = bisect_left(ks, xlo)
    return not (i < len(ks) and ks[i] <= xhi - 1)


def visible_diagonal45(pivot: Point, target: Point, graph: ObstacleGraph,
                       strict: bool = False) -> bool:
    """Exact-diagonal visibility via corner roles of the lattice points crossed.

    An ascending segment enters cell (q.x, q.y) whenever it passes lattice
    point q short of the target, so it is blocked iff such a q is the
    left-bottom corner of an occupied cell; descending segments mirror this
    with the left-top corner. ``strict`` switches to the blunter variant
    that tests both corner roles at strictly interior lattice points only.
    """
    dx = target[0] - pivot[0]
    dy = target[1] - pivot[1]
    if dx <= 0 or abs(dy) != dx:
        raise ValueError("pair is not an exact rightward diagonal")
    step = 1 if dy > 0 else -1
    if strict:
        for i in range(1, dx):
            q = (pivot[0] + i, pivot[1] + i * step)
            role = graph.corner_role(q)
            if role.is_left_bottom_corner or role.is_left_top_corner:
                return False
        return True
    for i in range(dx):
        qx = pivot[0] + i
        qy = pivot[1] + i * step
        if step > 0:
            if graph.grid.is_occupied(qx, qy):
                return False
        else:
            if graph.grid.is_occupied(qx, qy - 1):
                return False
    return True


def brute_force_visible(pivot: Point, target: Point, grid: OccupancyGrid) -> bool:
    """Ground-truth intervisibility, checked against every cell of the grid.

    Visible iff the open interior of no occupied cell is crossed and no
    blocking edge overlaps the segment collinearly with positive length.
    Independent of the obstacle-graph indexes and of the sweep.
    """
    ax, ay = pivot
    bx, by = target
    dx, dy = bx - ax, by - ay
    if dx == 0 and dy == 0:
        raise ValueError("pivot and target coincide")
    occ = grid.occupied
    if dx == 0:
        x = ax
        if x <= 0 or x >= grid.cols:
            return True
        ylo, yhi = sorted((ay, by))
        ylo, yhi = max(ylo, 0), min(yhi, grid.rows)
        band = occ[ylo:yhi, x - 1] & occ[ylo:yhi, x]
        return not bool(band.any())
    if dy == 0:
        y = ay
        if y <= 0 or y >= grid.rows:
            return True
        xlo, xhi = sorted((ax, bx))
        xlo, xhi = max(xlo, 0), min(xhi, grid.cols)
        band = occ[y - 1, xlo:xhi] & occ[y, xlo:xhi]
        return not bool(band.any())
    rows_idx, cols_idx = np.nonzero(occ)
    if rows_idx.size == 0:
        return True
    if dx < 0:
        ax, ay, dx, dy = bx, by, -dx, -dy
    cols_idx = cols_idx.astype(np.int64)
    rows_idx = rows_idx.astype(np.int64)
    ady = dy if dy > 0 else -dy
    q = dx * ady
    xlo = (cols_idx - ax) * ady
    xhi = xlo + ady
    if dy > 0:
        ylo = (rows_idx - ay) * dx
    else:
        ylo = (ay - rows_idx - 1) * dx
    yhi = ylo + dx
    lo = np.maximum(np.maximum(xlo, ylo), 0)
    hi = np.minimum(np.minimum(xhi, yhi), q)
    return not bool((lo < hi).any())


def sweep_order(pivot: Point, targets) -> list[Point]:
    """Targets sorted by decreasing slope around the pivot, nearer point first
    on slope ties. Uses exact rational comparison."""
    def key(t: Point):
        r2 = (t[0] - pivot[0]) ** 2 + (t[1] - pivot[1]) ** 2
        return (SlopeKey.of(pivot, t), -r2)
    return sorted(targets, key=key, reverse=True)


class _PivotPrep:
    """Per-pivot edge data for the sweep: slope interval, probe radii and the
    pivot's side of each edge line, for every obstacle edge wholly in the
    closed right half-plane that is not collinear with a pivot ray."""

    __slots__ = ("tuples", "khi", "klo", "addr2", "remr2", "add_order")

    def __init__(self, graph: ObstacleGraph, pivot: Point):
        px, py = pivot
        eax, eay, ebx, eby = graph._eax, graph._eay, graph._ebx, graph._eby
        keep = (eax >= px) & (ebx >= px)
        keep &= ~(((eax == px) & (eay == py)) | ((ebx == px) & (eby == py)))
        ax, ay = eax[keep], eay[keep]
        bx, by = ebx[keep], eby[keep]
        adx, ady = ax - px, ay - py
        bdx, bdy = bx - px, by - py
        with np.errstate(divide="ignore"):
            ka = ady.astype(np.float64) / adx.astype(np.float64)
            kb = bdy.astype(np.float64) / bdx.astype(np.float64)
        straddle = ka != kb  # edges along a pivot ray never block a sweep target
        if not bool(straddle.all()):
            ax, ay, bx, by = ax[straddle], ay[straddle], bx[straddle], by[straddle]
            adx, ady, bdx, bdy = adx[straddle], ady[straddle], bdx[straddle], bdy[straddle]
            ka, kb = ka[straddle], kb[straddle]
        a_high = ka > kb
        self.khi = np.where(a_high, ka, kb)
        self.klo = np.where(a_high, kb, ka)
        r2a = adx * adx + ady * ady
        r2b = bdx * bdx + bdy * bdy
        self.addr2 = np.where(a_high, r2a, r2b)
        self.remr2 = np.where(a_high, r2b, r2a)
        op = np.sign((bx - ax) * (py - ay) - (by - ay) * (px - ax))
        self.tuples = list(zip(ax.tolist(), ay.tolist(), bx.tolist(), by.tolist(),
                               op.tolist(), self.klo.tolist(), self.khi.tolist()))
        self.add_order = None  # lazily sorted for the per-pair mode


def _sweep_flags(pivot: Point, targets: list[Point], prep: _PivotPrep,
                 trace: list | None = None) -> list[bool]:
    """Run one clockwise rotational pass and answer every generic target.

    Probe events are edge insertions (at the endpoint with the larger slope),
    edge removals (smaller slope) and target tests, ordered by decreasing
    slope, then increasing squared distance, then insertions before removals
    before tests. A target is visible iff no critical edge whose slope
    interval strictly spans the target's slope separates the pivot from the
    target; for an axis-parallel edge on integer endpoints that sign test is
    exactly proper intersection of the edge with the line of sight.
    """
    px, py = pivot
    tn = len(targets)
    tx = np.array([t[0] for t in targets], dtype=np.int64)
    ty = np.array([t[1] for t in targets], dtype=np.int64)
    tdx, tdy = tx - px, ty - py
    kt = tdy.astype(np.float64) / tdx.astype(np.float64)
    tr2 = tdx * tdx + tdy * tdy

    en = len(prep.tuples)
    keys = np.concatenate((prep.khi, prep.klo, kt))
    r2s = np.concatenate((prep.addr2, prep.remr2, tr2))
    kinds = np.concatenate((np.zeros(en, np.int8), np.ones(en, np.int8),
                            np.full(tn, 2, np.int8)))
    pays = np.concatenate((np.arange(en), np.arange(en), np.arange(tn)))
    order = np.lexsort((kinds, r2s, -keys))

    ks = kinds[order].tolist()
    ps = pays[order].tolist()
    ktl = kt.tolist()
    txl = tx.tolist()
    tyl = ty.tolist()
    tuples = prep.tuples
    out = [True] * tn
    lcr: dict[int, tuple] = {}
    for kd, pay in zip(ks, ps):
        if kd == 0:
            lcr[pay] = tuples[pay]
            if trace is not None:
                t = tuples[pay]
                trace.append(f"add ({t[0]},{t[1]})-({t[2]},{t[3]}) |L|={len(lcr)}")
        elif kd == 1:
            lcr.pop(pay, None)
            if trace is not None:
                t = tuples[pay]
                trace.append(f"remove ({t[0]},{t[1]})-({t[2]},{t[3]}) |L|={len(lcr)}")
        else:
            k = ktl[pay]
            x = txl[pay]
            y = tyl[pay]
            vis = True
            for (ax, ay, bx, by, op, lo, hi) in lcr.values():
                if lo < k < hi and ((bx - ax) * (y - ay) - (by - ay) * (x - ax)) * op < 0:
                    vis = False
                    break
            out[pay] = vis
            if trace is not None:
                trace.append(f"probe ({x},{y}) |L|={len(lcr)} -> "
                             f"{'visible' if vis else 'blocked'}")
    return out


def sweep_visible_set(pivot: Point, targets, graph: ObstacleGraph,
                      trace: list | None = None) -> set[Point]:
    """Visible subset of generic-case targets around one pivot.

    Targets must be distinct from the pivot, strictly to its right and in
    generic position (not same row/column, not an exact diagonal). Matches
    :func:`brute_force_visible` on every pair.
    """
    targets = list(targets)
    if not targets:
        return set()
    prep = _PivotPrep(graph, pivot)
    flags = _sweep_flags(pivot, targets, prep, trace)
    return {t for t, f in zip(targets, flags) if f}


def pair_visible_sweep(pivot: Point, target: Point, graph: ObstacleGraph,
                       prep: _PivotPrep | None = None) -> bool:
    """Single-pair rotational scan, kept for benchmarking against the
    per-pivot pass.

    Rotates clockwise from the highest slope and tests each edge as it
    enters the critical list against the pivot-target segment, stopping once
    the sweep slope drops below the target's. Answers equal
    :func:`sweep_visible_set`.
    """
    if prep is None:
        prep = _PivotPrep(graph, pivot)
    if prep.add_order is None:
        prep.add_order = np.lexsort((prep.addr2, -prep.khi))
    px, py = pivot
    kt = (target[1] - py) / (target[0] - px)
    seg = (pivot, target)
    khi = prep.khi
    tuples = prep.tuples
    for i in prep.add_order.tolist():
        if khi[i] < kt:
            break
        t = tuples[i]
        if segments_properly_intersect(((t[0], t[1]), (t[2], t[3])), seg):
            return False
    return True


class VisibilityGraph:
    """Undirected graph over unmarked obstacle vertices plus the endpoints,
    with an edge between every intervisible pair weighted by Euclidean
    distance in meters."""

    def __init__(self, vertices, edge_weights: dict[tuple[Point, Point], float],
                 cell_size_m: float):
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.vertex_set = frozenset(self.vertices)
        self.edges = dict(edge_weights)  # key (u, v) with u < v
        self.cell_size_m = cell_size_m
        adj: dict[Point, list[tuple[Point, float]]] = {v: [] for v in self.vertices}
        for (u, v), w in self.edges.items():
            adj[u].append((v, w))
            adj[v].append((u, w))
        for lst in adj.values():
            lst.sort()
        self.adjacency = adj

    def neighbors(self, p: Point) -> list[tuple[Point, float]]:
        return self.adjacency[p]

    def has_edge(self, u: Point, v: Point) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def weight(self, u: Point, v: Point) -> float:
        return self.edges[(u, v) if u < v else (v, u)]

    def edge_set(self) -> set[tuple[Point, Point]]:
        return set(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VisibilityGraph):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and self.cell_size_m == other.cell_size_m)

    def __repr__(self) -> str:
        return f"VisibilityGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def build_visibility_graph(graph: ObstacleGraph, source: Point, dest: Point, *,
                           strict_case3: bool = False, per_pair: bool = False,
                           parallel: bool = False) -> VisibilityGraph:
    """Assemble the visibility graph over unmarked vertices plus source and
    destination.

    Every unordered pair is decided exactly once: the lexicographically
    smaller point acts as pivot, so all targets lie in its closed right
    half-plane (points straight above count as vertical pairs). Pairs split
    into the four cases; generic targets go through one rotational sweep per
    pivot. ``parallel`` runs pivots on a thread pool with identical results.
    """
    grid = graph.grid
    if max(grid.cols, grid.rows) >= _COORD_LIMIT:
        raise ValueError("grid too large for exact slope keys")
    for name, p in (("source", source), ("destination", dest)):
        if not grid.in_lattice(p):
            raise InvalidEndpointError(f"{name} {p} outside the corner lattice")
        if p in graph.marked:
            raise InvalidEndpointError(f"{name} {p} is interior to an obstacle")
    if source == dest:
        raise InvalidEndpointError("source equals destination")

    cand = sorted(set(graph.unmarked_vertices()) | {source, dest})
    cxa = np.array([c[0] for c in cand], dtype=np.int64)
    cya = np.array([c[1] for c in cand], dtype=np.int64)

    def pivot_pairs(i: int) -> list[tuple[Point, Point]]:
        pivot = cand[i]
        px, py = pivot
        dx = cxa[i + 1:] - px
        dy = cya[i + 1:] - py
        if dx.size == 0:
            return []
        visible: list[Point] = []
        for j in np.nonzero(dx == 0)[0].tolist():
            t = cand[i + 1 + j]
            if visible_vertical(pivot, t, graph):
                visible.append(t)
        for j in np.nonzero((dy == 0) & (dx > 0))[0].tolist():
            t = cand[i + 1 + j]
            if visible_horizontal(pivot, t, graph):
                visible.append(t)
        for j in np.nonzero((dx > 0) & (dx == np.abs(dy)))[0].tolist():
            t = cand[i + 1 + j]
            if visible_diagonal45(pivot, t, graph, strict=strict_case3):
                visible.append(t)
        gen = [cand[i + 1 + j]
               for j in np.nonzero((dx > 0) & (dy != 0) & (dx != np.abs(dy)))[0].tolist()]
        if gen:
            if per_pair:
                prep = _PivotPrep(graph, pivot)
                visible.extend(t for t in gen if pair_visible_sweep(pivot, t, graph, prep))
            else:
                prep = _PivotPrep(graph, pivot)
                flags = _sweep_flags(pivot, gen, prep)
                visible.extend(t for t, f in zip(gen, flags) if f)
        return [(pivot, t) for t in visible]

    if parallel:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(pivot_pairs, range(len(cand))))
    else:
        results = [pivot_pairs(i) for i in range(len(cand))]

    p = grid.cell_size_m
    edges = {}
    for pairs in results:
        for u, v in pairs:
            edges[(u, v)] = euclid_distance(u, v) * p
    return VisibilityGraph(cand, edges, p)
