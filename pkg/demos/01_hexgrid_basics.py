#!/usr/bin/env python3
"""Tour of the hexagonal grid: axial coordinates, the six move directions,
the closed-form metric, and worlds with an inaccessible marginal ring.

Usage::

    python demos/01_hexgrid_basics.py
"""

from hexswarm import HexCoord, accessible_neighbors, hex_distance, make_world, step
from hexswarm.hexworld import DIRECTIONS


def main():
    origin = HexCoord(0, 0)
    print("The six neighbors of", tuple(origin))
    for d in DIRECTIONS:
        n = step(origin, d)
        print(f"  direction {int(d)} ({d.name:>2}) -> {tuple(n)}  distance {hex_distance(origin, n)}")

    a, b = HexCoord(-3, 1), HexCoord(4, -2)
    print(f"\nhex_distance({tuple(a)}, {tuple(b)}) = {hex_distance(a, b)}")

    w = make_world(radius=15, margin=1, target=HexCoord(10, 0), entry=HexCoord(-10, 0))
    print(f"\nA radius-{w.radius} world with a margin-{w.margin} forbidden ring:")
    print(f"  accessible cells: {w.accessible_cell_count()}")
    print(f"  target {tuple(w.target)}, entry {tuple(w.entry)},",
          f"{hex_distance(w.entry, w.target)} cells apart")

    rim = HexCoord(w.radius - w.margin, 0)
    open_dirs = [int(d) for d, _ in accessible_neighbors(w, rim)]
    print(f"  rim cell {tuple(rim)} can only move in directions {open_dirs}")


if __name__ == "__main__":
    main()
