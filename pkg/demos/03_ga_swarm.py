#!/usr/bin/env python3
"""A 20-robot swarm under the genetic controller: robots enter one per tick
through the importing point, wander until someone senses the target, then
the news floods the ad hoc network and the swarm converges.

Usage::

    python demos/03_ga_swarm.py [seed]
"""

import sys

from hexswarm import parse_config, run


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    cfg = parse_config(f"controller = ga\nseed = {seed}\n")
    print(f"GA scenario: {cfg.robots} robots, radius {cfg.radius}, seed {seed}")
    result = run(cfg)
    s = result.summary

    print(f"status: {s['status']} after {s['ticks']} ticks")
    print(f"first robot reached the target area at tick {s['first_arrival_tick']}")
    print(f"{s['fraction_arrived']:.0%} of the swarm arrived")
    print(f"{s['messages_delivered']} message deliveries were tracked\n")

    print("median distance to target over time:")
    median = s["median_distance"]
    for t in range(0, len(median), 50):
        bar = "#" * int(median[t])
        print(f"  tick {t:>3}: {median[t]:>5.1f} {bar}")


if __name__ == "__main__":
    main()
