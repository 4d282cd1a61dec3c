"""Tests for obstacle-graph construction and its indexes."""

import random

from gridroute.gridmap import OccupancyGrid
from gridroute.mapgen import gen_random_map
from gridroute.obstacle_graph import (blocking_edges, build_obstacle_graph,
                                      marked_vertices)

from oracles import recount_blocking, recount_marked


def _grid_with(cells, rows=6, cols=6):
    g = OccupancyGrid(rows, cols)
    g.mark_cells(cells)
    return g


def test_single_cell_counts():
    gobs = build_obstacle_graph(_grid_with([(1, 1)]))
    assert len(gobs.vertices) == 4
    assert len(gobs.marked) == 0
    assert len(gobs.edges) == 4
    assert len(blocking_edges(gobs)) == 0


def test_domino_counts():
    gobs = build_obstacle_graph(_grid_with([(0, 0), (1, 0)]))
    assert len(gobs.vertices) == 6
    assert len(gobs.marked) == 0
    assert len(gobs.edges) == 7
    blocks = blocking_edges(gobs)
    assert {(e.a, e.b) for e in blocks} == {((1, 0), (1, 1))}


def test_two_by_two_block_counts():
    gobs = build_obstacle_graph(_grid_with([(1, 1), (2, 1), (1, 2), (2, 2)]))
    assert len(gobs.vertices) == 9
    assert marked_vertices(gobs) == {(2, 2)}
    assert len(gobs.edges) == 12
    assert len(blocking_edges(gobs)) == 4


def test_kxk_block_blocking_counts():
    for k in (2, 3, 4, 5):
        cells = [(x, y) for x in range(k) for y in range(k)]
        gobs = build_obstacle_graph(_grid_with(cells, rows=k + 1, cols=k + 1))
        assert len(blocking_edges(gobs)) == 2 * k * (k - 1)


def test_marked_three_by_three():
    cells = [(x, y) for x in range(3) for y in range(3)]
    gobs = build_obstacle_graph(_grid_with(cells))
    assert marked_vertices(gobs) == {(1, 1), (2, 1), (1, 2), (2, 2)}


def test_marked_empty_without_blocks():
    gobs = build_obstacle_graph(_grid_with([(0, 0), (2, 0), (4, 2), (0, 3)]))
    assert marked_vertices(gobs) == set()


def test_marked_matches_recount_on_seeded_grids():
    for seed in range(10):
        grid = gen_random_map(20, 20, 120 + seed * 10, seed)
        gobs = build_obstacle_graph(grid)
        assert marked_vertices(gobs) == recount_marked(grid)


def test_blocking_matches_recount_on_seeded_grids():
    for seed in range(10):
        grid = gen_random_map(20, 20, 120 + seed * 10, seed)
        gobs = build_obstacle_graph(grid)
        assert {(e.a, e.b) for e in blocking_edges(gobs)} == recount_blocking(grid)


def test_corner_role_single_cell():
    gobs = build_obstacle_graph(_grid_with([(1, 1)]))
    assert gobs.corner_role((1, 1)) == (True, False)
    assert gobs.corner_role((1, 2)) == (False, True)
    assert gobs.corner_role((2, 1)) == (False, False)
    assert gobs.corner_role((5, 5)) == (False, False)


def test_vertex_upper_bound():
    rng = random.Random(8)
    for seed in range(10):
        grid = gen_random_map(12, 12, rng.randint(0, 60), seed)
        gobs = build_obstacle_graph(grid)
        assert len(gobs.vertices) <= 4 * grid.occupied_count()


def test_isolated_cells_hit_vertex_bound():
    gobs = build_obstacle_graph(_grid_with([(0, 0), (2, 0), (4, 0), (0, 2)]))
    assert len(gobs.vertices) == 16


def test_marked_vertex_edges_all_blocking():
    grid = gen_random_map(15, 15, 110, 4)
    gobs = build_obstacle_graph(grid)
    blocks = {(e.a, e.b) for e in blocking_edges(gobs)}
    for v in gobs.marked:
        incident = [gobs.edges[i] for i in gobs.adjacency[v]]
        assert len(incident) == 4
        assert all((e.a, e.b) in blocks for e in incident)


def test_blocking_endpoints_touch_two_cells():
    grid = gen_random_map(15, 15, 90, 5)
    gobs = build_obstacle_graph(grid)
    for e in blocking_edges(gobs):
        for p in (e.a, e.b):
            assert gobs.vertex(p).incident_obstacle_cells >= 2


def test_build_deterministic():
    grid = gen_random_map(18, 14, 70, 12)
    a = build_obstacle_graph(grid)
    b = build_obstacle_graph(grid)
    assert a.dump() == b.dump()


def test_dump_golden_single_cell():
    gobs = build_obstacle_graph(_grid_with([(0, 0)], rows=1, cols=1))
    assert gobs.dump() == (
        "V 0 0 1 0\n"
        "V 1 0 1 0\n"
        "V 0 1 1 0\n"
        "V 1 1 1 0\n"
        "E 0 0 1 0 1 0\n"
        "E 0 1 1 1 1 0\n"
        "E 0 0 0 1 1 0\n"
        "E 1 0 1 1 1 0\n"
    )
