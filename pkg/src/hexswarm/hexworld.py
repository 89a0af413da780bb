"""Hexagonal grid geometry: axial coordinates, the six move directions,
bounded worlds with an inaccessible marginal ring, and occupancy.

Cells are addressed with axial (q, r) integer pairs. The board is a hexagon
of a given radius centered on the origin; cells whose distance from the
origin exceeds ``radius - margin`` are inaccessible, which keeps robots away
from the rim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, NamedTuple, Optional


class HexCoord(NamedTuple):
    """Axial cell address. Equality and hashing are componentwise."""

    q: int
    r: int


class Direction(IntEnum):
    """The six axial neighbor offsets, in fixed index order 0..5."""

    E = 0
    NE = 1
    NW = 2
    W = 3
    SW = 4
    SE = 5


# Offset table indexed by Direction: (+1,0), (+1,-1), (0,-1), (-1,0), (-1,+1), (0,+1)
DIRECTION_OFFSETS: tuple[tuple[int, int], ...] = (
    (1, 0),
    (1, -1),
    (0, -1),
    (-1, 0),
    (-1, 1),
    (0, 1),
)

DIRECTIONS: tuple[Direction, ...] = tuple(Direction)

ORIGIN = HexCoord(0, 0)


class WorldConfigError(ValueError):
    """Raised when world parameters are inconsistent; names the offending field."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass
class Move:
    """A movement choice: direction plus speed in whole cells per tick."""

    direction: Direction
    speed: int


def hex_distance(a: HexCoord, b: HexCoord) -> int:
    """Axial hex metric: (|dq| + |dr| + |dq+dr|) / 2."""
    dq = a.q - b.q
    dr = a.r - b.r
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


def step(c: HexCoord, d: Direction) -> HexCoord:
    """The neighbor of c in direction d."""
    dq, dr = DIRECTION_OFFSETS[d]
    return HexCoord(c.q + dq, c.r + dr)


@dataclass
class World:
    """Hexagonal board of the given radius with an inaccessible marginal ring.

    Cells exist at hex distance <= radius from the origin; cells beyond
    radius - margin are inaccessible. Occupancy maps cell -> robot id and
    holds at most one robot per cell.
    """

    radius: int
    margin: int
    target: HexCoord
    entry: HexCoord
    occupancy: dict[HexCoord, int] = field(default_factory=dict)

    def accessible(self, c: HexCoord) -> bool:
        return hex_distance(c, ORIGIN) <= self.radius - self.margin

    def is_cell(self, c: HexCoord) -> bool:
        return hex_distance(c, ORIGIN) <= self.radius

    def occupant(self, c: HexCoord) -> Optional[int]:
        return self.occupancy.get(c)

    def accessible_cell_count(self) -> int:
        k = self.radius - self.margin
        return 3 * k * (k + 1) + 1


def accessible_cells(w: World) -> Iterator[HexCoord]:
    """All accessible cells, row-major in (q, r)."""
    k = w.radius - w.margin
    for q in range(-k, k + 1):
        for r in range(max(-k, -q - k), min(k, -q + k) + 1):
            yield HexCoord(q, r)


def accessible_neighbors(w: World, c: HexCoord) -> list[tuple[Direction, HexCoord]]:
    """The accessible subset of c's six neighbors, in ascending direction order."""
    out = []
    for d in DIRECTIONS:
        n = step(c, d)
        if w.accessible(n):
            out.append((d, n))
    return out


def make_world(radius: int, margin: int, target: HexCoord, entry: HexCoord) -> World:
    """Build an empty world, validating bounds and the two special cells."""
    if radius < 1:
        raise WorldConfigError("radius", f"must be >= 1, got {radius}")
    if margin < 0:
        raise WorldConfigError("margin", f"must be >= 0, got {margin}")
    if margin >= radius:
        raise WorldConfigError("margin", f"must be < radius ({radius}), got {margin}")
    w = World(radius=radius, margin=margin, target=target, entry=entry)
    if not w.accessible(target):
        raise WorldConfigError("target", f"{tuple(target)} is not an accessible cell")
    if not w.accessible(entry):
        raise WorldConfigError("entry", f"{tuple(entry)} is not an accessible cell")
    if target == entry:
        raise WorldConfigError("entry", "entry must differ from target")
    return w
