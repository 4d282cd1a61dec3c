"""3D heuristics: pick a flight altitude, then route through a tilted plane.

First, the altitude chooser scans occupancy layers and picks the least
cluttered one (ties fall to the lowest, which costs the least battery).
Then a voxel wall with a single off-axis gap shows the rotated-plane
planner: the straight-ahead plane is blocked, and the fan of candidate
planes pivoted on the source-destination line finds the one that threads
the gap.
"""

from gridroute import (OccupancyGrid, PlanConfig, VoxelWorld, choose_layer,
                       plan_rotated_planes, rotated_plane_slice)

# altitude choice over three perceived layers
layers = []
for n in (40, 12, 3):
    g = OccupancyGrid(10, 10)
    g.mark_cells([(i % 10, i // 10) for i in range(n)])
    layers.append(g)
idx = choose_layer(layers)
print(f"occupancy per layer: {[g.occupied_count() for g in layers]} "
      f"-> fly at layer {idx}")

# a 5x5x5 world with a wall at x in [2, 3], one voxel missing off-axis
world = VoxelWorld(5, 5, 5)
world.occupied[2, :, :] = True
world.occupied[2, 3, 3] = False
source, dest = (0.0, 2.5, 2.5), (5.0, 2.5, 2.5)

path, theta = plan_rotated_planes(world, source, dest, PlanConfig())
print(f"chosen plane: {theta:g} degrees, in-plane length {path.length_m:.3f}")

plane = rotated_plane_slice(world, source, dest, theta)
print("route in world coordinates:")
for x, y in path.waypoints:
    wx, wy, wz = plane.to_world(x, y)
    print(f"  ({wx:.2f}, {wy:.2f}, {wz:.2f})")
