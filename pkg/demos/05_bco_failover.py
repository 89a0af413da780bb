#!/usr/bin/env python3
"""Bee-colony leadership: one dancer robot steers the swarm; killing it
mid-run triggers failover to the best-informed survivor and the march
continues. Prints the leadership timeline around the removal.

Usage::

    python demos/05_bco_failover.py [seed]
"""

import sys

from hexswarm import parse_config
from hexswarm.engine import init_state, tick


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    probe = init_state(parse_config(f"controller = bco\nseed = {seed}\n"))
    for _ in range(100):
        tick(probe)
    doomed = probe.board.leader
    print(f"probe run: robot {doomed} is the dancer going into tick 100")

    cfg = parse_config(f"controller = bco\nseed = {seed}\nremovals = 100:{doomed}\n")
    state = init_state(cfg)
    timeline = []
    while state.tick < cfg.max_ticks:
        tick(state)
        if state.board is not None:
            timeline.append((state.tick - 1, state.board.leader, state.board.strength))
        if not state.live_ids() and not state.pending_spawn:
            break

    print(f"\nleadership around the removal at tick 100:")
    for t, leader, strength in timeline:
        if 95 <= t <= 115:
            marker = " <- removal tick" if t == 100 else ""
            print(f"  tick {t:>3}: leader {leader:>2}, dance strength {strength:.2f}{marker}")

    changes = [
        (cur[0], cur[1])
        for prev, cur in zip(timeline, timeline[1:])
        if cur[1] != prev[1]
    ]
    print(f"\nleader changed {len(changes)} times in total: {changes[:8]}")
    arrived = sum(1 for r in state.robots.values() if r.arrived)
    print(f"{arrived}/{cfg.robots} robots arrived by tick {state.tick}")


if __name__ == "__main__":
    main()
