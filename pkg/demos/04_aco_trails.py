#!/usr/bin/env python3
"""Ant-colony trails: robots that sense the target deposit pheromone scaled
by closeness, the swarm follows the shared field, and a trail chain forms
between the crowd and the target. Renders the field as an ASCII heat map.

Usage::

    python demos/04_aco_trails.py [seed]
"""

import sys

from hexswarm import parse_config
from hexswarm.engine import init_state, tick
from hexswarm.hexworld import accessible_cells


def heat_char(level, peak):
    if level <= 0:
        return "."
    scale = " .:-=+*#%@"
    idx = min(int(level / peak * (len(scale) - 1)) + 1, len(scale) - 1)
    return scale[idx]


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    cfg = parse_config(f"controller = aco\nseed = {seed}\n")
    state = init_state(cfg)
    print(f"ACO scenario, seed {seed}: running until the first robot arrives...")
    while state.tick < cfg.max_ticks and state.first_arrival_tick is None:
        tick(state)
    print(f"first arrival at tick {state.first_arrival_tick}")

    field = state.global_pher
    peak = max(field.levels.values(), default=0.0)
    print(f"{len(field.levels)} cells hold pheromone, peak level {peak:.2f}")
    print("T marks the target, E the entry, o a robot:\n")

    occupied = {robot.pos for robot in state.robots.values() if robot.live}
    rows = {}
    for cell in accessible_cells(state.world):
        rows.setdefault(cell.r, []).append(cell)
    for r in sorted(rows):
        indent = " " * abs(r)
        line = []
        for cell in sorted(rows[r]):
            if cell == state.world.target:
                line.append("T")
            elif cell == state.world.entry:
                line.append("E")
            elif cell in occupied:
                line.append("o")
            else:
                line.append(heat_char(field.level(cell), peak))
        print(indent + " ".join(line))


if __name__ == "__main__":
    main()
