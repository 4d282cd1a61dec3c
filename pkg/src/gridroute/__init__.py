"""Shortest obstacle-free route planning on occupancy grids.

The pipeline discretizes a region into an occupancy grid, builds the
obstacle graph of occupied-cell corners, assembles a visibility graph with
a rotational sweep and runs Dijkstra over it. Multi-stop journeys, altitude
layer choice and rotated-plane 3D planning extend the planar core.
"""

from .errors import (DegenerateObstacleError, InvalidEndpointError,
                     MapParseError, NoPathError, OutOfBoundsError)
from .geometry import (Point, Segment, SlopeKey, collinear_overlap, cross,
                       euclid_distance, segment_crosses_open_cell,
                       segments_properly_intersect, slope_compare)
from .gridmap import (OccupancyGrid, convex_hull, discretize_dimensions,
                      parse_map, rasterize_hull, serialize_map)
from .mapgen import SplitMix64, gen_random_map
from .obstacle_graph import (ObstacleEdge, ObstacleGraph, ObstacleVertex,
                             blocking_edges, build_obstacle_graph,
                             marked_vertices)
from .pathfind import (Path, deflection_points, dijkstra_shortest_path,
                       format_length, merge_collinear, path_from_text,
                       path_length, path_to_text)
from .planner import (MapProvider, PlanConfig, PlaneSlice, StaticMapProvider,
                      VoxelWorld, choose_layer, parse_voxels, plan2d,
                      plan_rotated_planes, plan_with_stops,
                      rotated_plane_slice, serialize_voxels)
from .render import RenderStyle, render_svg
from .visibility import (VisibilityGraph, brute_force_visible,
                         build_visibility_graph, classify_pair,
                         pair_visible_sweep, sweep_order, sweep_visible_set,
                         visible_diagonal45, visible_horizontal,
                         visible_vertical)

__version__ = "0.1.0"
