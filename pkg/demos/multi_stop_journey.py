"""A long journey split at intermediate stops with re-perception.

At each stop the drone climbs, captures a fresh map of its surroundings and
plans the next leg on it. The provider below scripts that behavior: the map
perceived at the stop differs from the one perceived at launch, and the
planner only ever sees the current one.
"""

from gridroute import OccupancyGrid, plan_with_stops

LAUNCH, STOP, GOAL = (0, 0), (8, 8), (16, 16)


class ScriptedPerception:
    """Maps keyed by where the drone perceives from."""

    def __init__(self):
        at_launch = OccupancyGrid(16, 16)
        at_launch.mark_cells([(4, y) for y in range(2, 8)])
        at_stop = OccupancyGrid(16, 16)
        at_stop.mark_cells([(12, y) for y in range(8, 14)])   # seen only up close
        self.maps = {LAUNCH: at_launch, STOP: at_stop}

    def grid_at(self, position):
        print(f"  perceiving at {position}")
        return self.maps[position]


journey = plan_with_stops(ScriptedPerception(), LAUNCH, GOAL, stops=[STOP])
print(f"journey length {journey.length_m:.2f} m")
print("waypoints:", " -> ".join(str(w) for w in journey.waypoints))

# a stop on the straight line costs nothing; one off the line costs distance
empty = OccupancyGrid(16, 16)


class Always:
    def __init__(self, grid):
        self.grid = grid

    def grid_at(self, position):
        return self.grid


on_line = plan_with_stops(Always(empty), LAUNCH, GOAL, stops=[(8, 8)])
off_line = plan_with_stops(Always(empty), LAUNCH, GOAL, stops=[(14, 2)])
print(f"stop on the line:  {on_line.length_m:.2f} m")
print(f"stop off the line: {off_line.length_m:.2f} m (detour)")
