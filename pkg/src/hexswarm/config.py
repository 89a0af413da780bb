"""Scenario configuration: a flat ``key = value`` text format with one
optional ``[ga]`` / ``[aco]`` / ``[bco]`` section per controller block.

Missing keys take the documented defaults; unknown keys are rejected with
their line number. Full-line comments start with '#'.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .aco import AcoParams
from .bco import BcoParams
from .ga import GaParams
from .hexworld import HexCoord, WorldConfigError, make_world

CONTROLLERS = ("ga", "aco", "bco")


class ConfigError(ValueError):
    """Bad scenario text or values; the message names the line or field."""


@dataclass
class ScenarioConfig:
    controller: str = "ga"
    robots: int = 20
    radius: int = 15
    margin: int = 1
    target: HexCoord = HexCoord(10, 0)
    entry: HexCoord = HexCoord(-10, 0)
    seed: int = 0
    max_ticks: int = 500
    comm_range: int = 2
    ttl: int = 5
    sensing_radius: int = 8
    removals: list[tuple[int, int]] = field(default_factory=list)  # (tick, robot id)
    ga: GaParams = field(default_factory=GaParams)
    aco: AcoParams = field(default_factory=AcoParams)
    bco: BcoParams = field(default_factory=BcoParams)


def _parse_coord(value: str) -> HexCoord:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'q,r', got {value!r}")
    return HexCoord(int(parts[0]), int(parts[1]))


def _parse_removals(value: str) -> list[tuple[int, int]]:
    out = []
    if not value.strip():
        return out
    for chunk in value.split(","):
        tick_s, _, rid_s = chunk.partition(":")
        if not rid_s:
            raise ValueError(f"expected 'tick:robot', got {chunk.strip()!r}")
        out.append((int(tick_s), int(rid_s)))
    return out


_TOP_PARSERS = {
    "controller": str,
    "robots": int,
    "radius": int,
    "margin": int,
    "target": _parse_coord,
    "entry": _parse_coord,
    "seed": int,
    "max_ticks": int,
    "comm_range": int,
    "ttl": int,
    "sensing_radius": int,
    "removals": _parse_removals,
}

_SECTION_PARSERS = {
    "ga": {
        "population": int,
        "generations": int,
        "tournament_k": int,
        "crossover_prob": float,
        "mutation_prob": float,
        "alignment_weight": float,
    },
    "aco": {
        "evaporation": float,
        "deposit_scale": float,
        "alpha": float,
        "beta": float,
        "floor": float,
    },
    "bco": {
        "follow_gain": float,
        "scout_prob": float,
        "leader_timeout": int,
    },
}


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate scenario text; raises ConfigError with the line
    number on parse problems and the field name on validation problems."""
    cfg = ScenarioConfig()
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SECTION_PARSERS:
                raise ConfigError(f"line {lineno}: unknown section [{section}]")
            continue
        key, eq, value = (s.strip() for s in line.partition("="))
        if not eq:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if section is None:
            if key not in _TOP_PARSERS:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            try:
                setattr(cfg, key, _TOP_PARSERS[key](value))
            except ValueError as exc:
                raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from exc
        else:
            parsers = _SECTION_PARSERS[section]
            if key not in parsers:
                raise ConfigError(f"line {lineno}: unknown key {key!r} in [{section}]")
            try:
                setattr(getattr(cfg, section), key, parsers[key](value))
            except ValueError as exc:
                raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from exc
    validate_config(cfg)
    return cfg


def _require(cond: bool, field_name: str, msg: str) -> None:
    if not cond:
        raise ConfigError(f"{field_name}: {msg}")


def validate_config(cfg: ScenarioConfig) -> None:
    _require(cfg.controller in CONTROLLERS, "controller", f"must be one of {CONTROLLERS}")
    try:
        world = make_world(cfg.radius, cfg.margin, cfg.target, cfg.entry)
    except WorldConfigError as exc:
        raise ConfigError(str(exc)) from exc
    _require(cfg.robots >= 1, "robots", "must be >= 1")
    _require(
        cfg.robots <= world.accessible_cell_count(),
        "robots",
        f"exceeds the {world.accessible_cell_count()} accessible cells",
    )
    _require(0 <= cfg.seed < 2**64, "seed", "must fit in an unsigned 64-bit integer")
    _require(cfg.max_ticks >= 0, "max_ticks", "must be >= 0")
    _require(cfg.comm_range >= 1, "comm_range", "must be >= 1")
    _require(cfg.ttl >= 0, "ttl", "must be >= 0")
    _require(cfg.sensing_radius >= 0, "sensing_radius", "must be >= 0")
    for tick, rid in cfg.removals:
        _require(tick >= 0, "removals", f"tick {tick} must be >= 0")
        _require(0 <= rid < cfg.robots, "removals", f"robot id {rid} out of range")

    ga = cfg.ga
    _require(ga.population >= 2, "population", "must be >= 2")
    _require(ga.population % 2 == 0, "population", "must be even")
    _require(ga.generations >= 1, "generations", "must be >= 1")
    _require(ga.tournament_k >= 1, "tournament_k", "must be >= 1")
    _require(0.0 <= ga.crossover_prob <= 1.0, "crossover_prob", "must be in [0, 1]")
    _require(0.0 <= ga.mutation_prob <= 1.0, "mutation_prob", "must be in [0, 1]")
    _require(ga.alignment_weight >= 0.0, "alignment_weight", "must be >= 0")

    aco = cfg.aco
    _require(0.0 < aco.evaporation < 1.0, "evaporation", "must be in (0, 1)")
    _require(aco.deposit_scale > 0.0, "deposit_scale", "must be > 0")
    _require(aco.alpha >= 0.0, "alpha", "must be >= 0")
    _require(aco.beta >= 0.0, "beta", "must be >= 0")
    _require(aco.floor >= 0.0, "floor", "must be >= 0")

    bco = cfg.bco
    _require(bco.follow_gain > 0.0, "follow_gain", "must be > 0")
    _require(0.0 <= bco.scout_prob <= 1.0, "scout_prob", "must be in [0, 1]")
    _require(bco.leader_timeout >= 1, "leader_timeout", "must be >= 1")


def config_overrides(cfg: ScenarioConfig, **overrides) -> ScenarioConfig:
    """Return a copy with the given non-None top-level fields replaced."""
    names = {f.name for f in fields(ScenarioConfig)}
    out = ScenarioConfig(
        **{name: getattr(cfg, name) for name in names if name not in ("ga", "aco", "bco")},
        ga=cfg.ga,
        aco=cfg.aco,
        bco=cfg.bco,
    )
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in names:
            raise ConfigError(f"{key}: unknown override")
        setattr(out, key, value)
    validate_config(out)
    return out
