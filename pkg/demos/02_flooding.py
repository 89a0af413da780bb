#!/usr/bin/env python3
"""Multi-hop flooding over a chain of robots: inject one message at the end
of a line and watch it hop outward round by round until the ttl runs dry.

Usage::

    python demos/02_flooding.py
"""

from hexswarm import HexCoord, Message, TrackerLog, connectivity_components
from hexswarm.comms import POSITION_REPORT, flood_round, new_mailboxes, send


def main():
    positions = {rid: HexCoord(rid, 0) for rid in range(8)}
    print("8 robots in a line at unit spacing, comm range 1")
    print("components:", connectivity_components(positions, 1))

    for ttl in (3, 7):
        boxes = new_mailboxes(positions)
        tracker = TrackerLog()
        send(boxes, 0, Message(0, 0, POSITION_REPORT, None, ttl))
        print(f"\nmessage from robot 0 with ttl {ttl}:")
        rnd = 0
        while True:
            made = flood_round(positions, boxes, 1, tracker, tick=rnd)
            if made == 0:
                break
            rnd += 1
            reached = sorted(rid for rid, box in boxes.items() if box.delivered)
            print(f"  after round {rnd}: reached {reached}")
        print(f"  tracker recorded {len(tracker)} deliveries:")
        for entry in tracker.entries:
            print(f"    robot {entry.relay} got ({entry.origin},{entry.seq}) at hop {entry.hops}")


if __name__ == "__main__":
    main()
